import unittest
from fractions import Fraction

import numpy as np
from parameterized import param, parameterized

from wallchamber.exceptions import NotEuclidean
from wallchamber.quivercore import (
    DimClass,
    Quiver,
    a_matrices,
    build_model,
    classify_dim,
    fz_mutate,
    g_from_dim,
)


def vec(*values):
    return tuple(Fraction(value) for value in values)


class TestQuiver(unittest.TestCase):
    def test_parse_is_order_insensitive(self):
        self.assertEqual(Quiver.from_text("4; 1>2,2>3,3>4,1>4"), Quiver.from_text("4;1>4, 3>4 ,2>3,1>2"))

    def test_round_trip_text(self):
        quiver = Quiver.from_text("3; 2>1,3>2,3>1")
        self.assertEqual(Quiver.from_text(quiver.to_text()), quiver)

    def test_multiple_arrows(self):
        quiver = Quiver.from_text("2; 1>2,1>2")
        self.assertEqual(quiver.arrow_matrix()[0, 1], 2)

    def test_exchange_matrix(self):
        quiver = Quiver.from_text("3; 1>2,2>3")
        expected = np.array([[0, 1, 0], [-1, 0, 1], [0, -1, 0]])
        np.testing.assert_array_equal(quiver.exchange_matrix(), expected)
        self.assertEqual(Quiver.from_exchange_matrix(expected), quiver)

    @parameterized.expand(
        [
            param("no separator", "4 1>2"),
            param("bad arrow", "2; 1-2"),
            param("vertex out of range", "2; 1>3"),
            param("loop", "2; 1>1,1>2"),
            param("disconnected", "4; 1>2,3>4"),
        ]
    )
    def test_invalid_text(self, name, text):
        with self.assertRaises(ValueError):
            Quiver.from_text(text)

    def test_acyclicity(self):
        self.assertTrue(Quiver.from_text("3; 1>2,2>3,1>3").is_acyclic())
        self.assertFalse(Quiver.from_text("3; 1>2,2>3,3>1").is_acyclic())


class TestHereditaryModel(unittest.TestCase):
    @parameterized.expand(
        [
            param("3; 2>1,3>2,3>1", vec(1, 1, 1), vec(-1, 0, 1)),
            param("4; 1>2,2>3,3>4,1>4", vec(1, 1, 1, 1), vec(1, 0, 0, -1)),
            param("4; 1>2,2>3,4>3,1>4", vec(1, 1, 1, 1), vec(1, 0, -1, 0)),
            param("5; 1>5,2>5,3>5,4>5", vec(1, 1, 1, 1, 2), vec(1, 1, 1, 1, -2)),
        ]
    )
    def test_null_root(self, text, eta, g_eta):
        model = build_model(Quiver.from_text(text))
        self.assertEqual(model.eta, eta)
        self.assertEqual(model.g_eta, g_eta)
        self.assertEqual(model.euler_form(eta, eta), 0)

    def test_projectives_are_paths(self):
        model = build_model(Quiver.from_text("4; 1>2,2>3,3>4,1>4"))
        self.assertEqual(model.proj_dims[0], vec(1, 1, 1, 2))
        self.assertEqual(model.proj_dims[3], vec(0, 0, 0, 1))
        for index, row in enumerate(model.proj_dims):
            expected = tuple(Fraction(int(k == index)) for k in range(4))
            self.assertEqual(g_from_dim(model, row), expected)

    def test_coxeter_fixes_null_root(self):
        model = build_model(Quiver.from_text("3; 2>1,3>2,3>1"))
        self.assertEqual(model.tau_dim(model.eta), model.eta)
        self.assertEqual(model.tau_inverse_dim(model.tau_dim(vec(0, 1, 0))), vec(0, 1, 0))

    def test_classification(self):
        model = build_model(Quiver.from_text("3; 2>1,3>2,3>1"))
        self.assertEqual(classify_dim(model, vec(0, 1, 0)), DimClass.REGULAR)
        self.assertEqual(classify_dim(model, model.proj_dims[0]), DimClass.PREPROJECTIVE)
        with self.assertRaisesRegex(ValueError, "zero dimension vector"):
            classify_dim(model, vec(0, 0, 0))

    def test_cyclic_quiver_is_rejected(self):
        with self.assertRaises(NotEuclidean):
            build_model(Quiver.from_text("3; 1>2,2>3,3>1"))

    @parameterized.expand([param("Dynkin A3", "3; 1>2,2>3"), param("wild", "3; 1>2,1>2,1>2,2>3")])
    def test_non_euclidean(self, name, text):
        with self.assertRaises(NotEuclidean):
            build_model(Quiver.from_text(text))


class TestMutation(unittest.TestCase):
    def test_fz_mutation_of_figure_quiver(self):
        start = Quiver.from_text("4; 1>2,2>3,3>4,1>4").exchange_matrix()
        mutated = Quiver.from_exchange_matrix(fz_mutate(start, 2))
        self.assertEqual(mutated, Quiver.from_text("4; 1>3,3>4,1>4,2>1,3>2"))

    def test_mutation_is_an_involution(self):
        start = Quiver.from_text("4; 3>1,3>4,4>2,2>1").exchange_matrix()
        for k in range(1, 5):
            np.testing.assert_array_equal(fz_mutate(fz_mutate(start, k), k), start)

    def test_a_matrices_square_to_identity(self):
        exchange_matrix = Quiver.from_text("4; 1>2,2>3,3>4,1>4").exchange_matrix()
        for k in range(1, 5):
            for matrix in a_matrices(exchange_matrix, k):
                np.testing.assert_array_equal(matrix @ matrix, np.eye(4, dtype=int))

    def test_a_matrix_rows(self):
        exchange_matrix = Quiver.from_text("4; 1>2,2>3,3>4,1>4").exchange_matrix()
        a_plus, a_minus = a_matrices(exchange_matrix, 2)
        np.testing.assert_array_equal(a_plus[1], [0, -1, 1, 0])
        np.testing.assert_array_equal(a_minus[1], [1, -1, 0, 0])

    def test_vertex_out_of_range(self):
        with self.assertRaisesRegex(ValueError, "out of range"):
            fz_mutate(np.zeros((2, 2), dtype=int), 3)

    def test_not_skew_symmetric(self):
        with self.assertRaisesRegex(ValueError, "skew-symmetric"):
            fz_mutate(np.array([[0, 1], [1, 0]]), 1)
