import unittest
from collections import Counter
from pathlib import Path

import numpy as np
import pytest
from parameterized import param, parameterized

from wallchamber.exactgeom import Cone, LabeledCone, matmul
from wallchamber.exceptions import InvariantViolation
from wallchamber.mutapp import (
    PictureState,
    acyclic_cycle_orientations,
    glue_pieces,
    minimal_unoriented_cycle,
    mutate_null_data,
    mutate_picture,
    mutate_sequence,
    pairing_preserved,
    search_null_data,
    transport_matrices,
    transport_null,
    verify_mutation_invariance,
)
from wallchamber.quivercore import Quiver, build_model
from wallchamber.tame import tube_data
from wallchamber.utils import load_dict_from_file

EXPECTED_LABELS = load_dict_from_file(Path(__file__).parent / "mutation_labels_expected.json")


def regular_state(text):
    model = build_model(Quiver.from_text(text))
    return PictureState.from_regular(model, tube_data(model))


class TestGoldenPictures(unittest.TestCase):
    @parameterized.expand([param(case["name"], case) for case in EXPECTED_LABELS])
    def test_transported_labels(self, name, case):
        state = mutate_sequence(regular_state(case["quiver"]), case["sequence"])
        self.assertEqual(state.quiver, Quiver.from_text(case["mutated_quiver"]))
        self.assertEqual(state.null_labels(), [tuple(case["null_label"])])
        self.assertEqual(Counter(state.labels()), Counter(tuple(label) for label in case["labels"]))
        self.assertEqual(state.eta, tuple(case["null_label"]))
        self.assertTrue(state.verify().verified)

    def test_history(self):
        state = mutate_sequence(regular_state("4; 3>1,3>4,4>2,2>1"), [2, 4])
        self.assertEqual(state.history, ((2, "+-"), (4, "+-")))

    def test_cut_wall_halves_stay_distinct(self):
        state = mutate_picture(regular_state("4; 1>2,2>3,3>4,1>4"), 2)
        halves = [wall for wall in state.walls if wall.label == (1, 1, 1, 1)]
        self.assertEqual(len(halves), 2)
        self.assertNotEqual(halves[0].cone, halves[1].cone)
        self.assertEqual({wall.module_id.rsplit("/", 1)[1] for wall in halves}, {"2+", "2-"})
        self.assertEqual(len({wall.module_id.rsplit("/", 1)[0] for wall in halves}), 1)


class TestGluePieces(unittest.TestCase):
    def setUp(self):
        self.upper = LabeledCone(Cone.from_generators(3, [(1, 0, 0), (-1, 0, 0), (0, 1, 0)]), (0, 0, 1), "a")
        self.lower = LabeledCone(Cone.from_generators(3, [(1, 0, 0), (-1, 0, 0), (0, -1, 0)]), (0, 0, 1), "b")

    def test_opposite_sides_of_different_walls_glue(self):
        (wall,) = glue_pieces([(0, "+", self.upper), (1, "-", self.lower)])
        self.assertEqual(wall.cone, Cone.linear_subspace(3, [(0, 0, 1)]))
        self.assertEqual(wall.module_id, "a|b")

    @parameterized.expand(
        [
            param("halves of one wall", (0, "+"), (0, "-")),
            param("same side", (0, "-"), (1, "-")),
            param("wall of the mutation vertex", (0, "k"), (1, "-")),
        ]
    )
    def test_pieces_kept_apart(self, name, first, second):
        walls = glue_pieces([first + (self.upper,), second + (self.lower,)])
        self.assertEqual(len(walls), 2)

    def test_different_labels_kept_apart(self):
        other = LabeledCone(self.lower.cone, (0, 0, 2), "c")
        self.assertEqual(len(glue_pieces([(0, "+", self.upper), (1, "-", other)])), 2)


class TestTransport(unittest.TestCase):
    def setUp(self):
        self.state = regular_state("4; 1>2,2>3,3>4,1>4")

    def test_null_data(self):
        eta, g_eta = transport_null(self.state, 2)
        self.assertEqual(eta, (1, 0, 1, 1))
        self.assertEqual(g_eta, (1, 0, 0, -1))

    def test_matrices_are_involutions(self):
        unit = tuple(tuple(int(row == column) for column in range(4)) for row in range(4))
        for matrix in transport_matrices(self.state, 2):
            self.assertEqual(matmul(matrix, matrix), unit)

    def test_pairing_preserved(self):
        a_plus, a_minus = transport_matrices(self.state, 3)
        for point, label in [((1, -2, 0, 1), (1, 1, 0, 1)), ((0, 3, -1, -2), (0, 1, 1, 0))]:
            self.assertTrue(pairing_preserved(a_plus, point, label))
            self.assertTrue(pairing_preserved(a_minus, point, label))

    def test_double_mutation_returns(self):
        twice = mutate_sequence(self.state, [2, 2])
        self.assertTrue(np.array_equal(twice.exchange_matrix, self.state.exchange_matrix))
        self.assertEqual((twice.eta, twice.g_eta), (self.state.eta, self.state.g_eta))
        self.assertEqual(Counter(twice.labels()), Counter(self.state.labels()))
        self.assertEqual(len(twice.verify().chambers), len(self.state.verify().chambers))

    def test_vertex_out_of_range(self):
        with self.assertRaisesRegex(ValueError, "out of range"):
            mutate_picture(self.state, 5)

    def test_null_data_only(self):
        state = mutate_null_data(self.state, 2)
        self.assertEqual(state.walls, ())
        self.assertEqual(state.history, ((2, "null"),))
        self.assertEqual(state.quiver, Quiver.from_text("4; 1>3,3>4,1>4,2>1,3>2"))

    def test_g_eta_must_annihilate_eta(self):
        with self.assertRaisesRegex(InvariantViolation, "does not annihilate"):
            PictureState(exchange_matrix=self.state.exchange_matrix, eta=(1, 1, 1, 1), g_eta=(1, 0, 0, 0))


class TestMutationSearch(unittest.TestCase):
    def test_search_null_data(self):
        target = Quiver.from_text("4; 1>3,3>4,4>1,1>2,2>3")
        found = search_null_data(target, max_depth=1)
        self.assertIsNotNone(found)
        start, sequence, state = found
        self.assertEqual(start, Quiver.from_text("4; 4>3,1>4,1>2,2>3"))
        self.assertEqual(sequence, (4,))
        self.assertEqual(state.eta, (1, 1, 1, 0))
        self.assertEqual(state.g_eta, (1, 0, -1, 0))

    def test_search_gives_up(self):
        self.assertIsNone(search_null_data(Quiver.from_text("3; 1>2,1>2,1>2,2>3,3>1"), max_depth=1))

    def test_minimal_unoriented_cycle(self):
        matrix = Quiver.from_text("4; 1>3,3>4,4>1,1>2,2>3").exchange_matrix()
        self.assertEqual(minimal_unoriented_cycle(matrix), frozenset({1, 2, 3}))

    @parameterized.expand(
        [
            param("oriented triangle", "3; 1>2,2>3,3>1", "no unoriented cycle"),
            param("tree", "3; 1>2,2>3", "no unoriented cycle"),
            param("two triangles", "4; 1>2,1>3,2>3,2>4,3>4", "2 minimal unoriented cycles"),
        ]
    )
    def test_minimal_unoriented_cycle_errors(self, name, text, message):
        with self.assertRaisesRegex(ValueError, message):
            minimal_unoriented_cycle(Quiver.from_text(text).exchange_matrix())

    def test_cycle_orientations(self):
        triangles = list(acyclic_cycle_orientations(3))
        self.assertEqual(len(triangles), 6)
        squares = list(acyclic_cycle_orientations(4))
        self.assertEqual(len(squares), 42)
        self.assertTrue(all(quiver.is_acyclic() for quiver in squares))
        with self.assertRaisesRegex(ValueError, "at least three vertices"):
            next(acyclic_cycle_orientations(2))


@pytest.mark.parametrize("sequence", [[1], [2], [2, 2]])
def test_mutation_invariance(sequence):
    report = verify_mutation_invariance(Quiver.from_text("4; 1>2,2>3,3>4,1>4"), sequence)
    assert report["passed"], report["violations"]
    assert [step["chamber_count"] for step in report["steps"]] == [report["chamber_count"]] * len(sequence)
