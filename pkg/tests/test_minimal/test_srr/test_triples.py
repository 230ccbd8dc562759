import os
import unittest
from fractions import Fraction

import numpy as np
import pytest

from wallchamber.exactgeom import cone_hull, verify_fan
from wallchamber.nakayama import NakModule, SttObject, projective
from wallchamber.quivercore import Quiver, build_model
from wallchamber.srr import (
    SrrTriple,
    composition_hypothesis,
    inclusion_checks,
    iota,
    is_cluster,
    is_projectively_closed,
    is_srr,
    pc,
    projective_closure,
    rho,
    tp,
    transportation_coefficients,
)
from wallchamber.tame import TubeModule, all_choices, projective_vector, tube_data

TWO_TUBES = "4; 1>2,2>3,4>3,1>4"
FULL_SAMPLING = os.getenv("WALLCHAMBER_FULL_SAMPLING", "") != ""


class TestSupportRegularRigid(unittest.TestCase):
    def setUp(self):
        self.model = build_model(Quiver.from_text(TWO_TUBES))
        self.td = tube_data(self.model)

    def p(self, *choice):
        return projective_vector(self.model, self.td, choice)

    def imaginary_cluster(self):
        return SrrTriple(
            modules=frozenset({TubeModule(1, 1, 1), TubeModule(2, 1, 1)}), pplus=frozenset({self.p(1, 1)})
        )

    def test_imaginary_cluster(self):
        triple = self.imaginary_cluster()
        self.assertEqual(is_srr(self.model, self.td, triple), (True, None))
        self.assertTrue(is_projectively_closed(self.model, self.td, triple))
        self.assertTrue(is_cluster(self.model, self.td, triple))

    def test_one_tube_short_of_a_cluster(self):
        triple = SrrTriple(modules=frozenset({TubeModule(1, 1, 1)}), pplus=frozenset({self.p(1, 1)}))
        self.assertTrue(is_srr(self.model, self.td, triple)[0])
        self.assertFalse(is_cluster(self.model, self.td, triple))

    def test_full_length_module_is_not_rigid(self):
        passed, reason = is_srr(self.model, self.td, SrrTriple(modules=frozenset({TubeModule(1, 1, 2)})))
        self.assertFalse(passed)
        self.assertIn("is not tau-rigid", reason)

    def test_hom_to_tau(self):
        triple = SrrTriple(modules=frozenset({TubeModule(1, 1, 1), TubeModule(1, 2, 1)}))
        passed, reason = is_srr(self.model, self.td, triple)
        self.assertFalse(passed)
        self.assertIn("Hom(", reason)

    def test_projective_vector_must_vanish_on_tau(self):
        triple = SrrTriple(modules=frozenset({TubeModule(1, 1, 1)}), pplus=frozenset({self.p(2, 1)}))
        passed, reason = is_srr(self.model, self.td, triple)
        self.assertFalse(passed)
        self.assertIn("does not vanish on tau X1(1,1)", reason)

    def test_negative_projective_vector_must_vanish(self):
        triple = SrrTriple(modules=frozenset({TubeModule(1, 1, 1)}), pminus=frozenset({self.p(1, 1)}))
        passed, reason = is_srr(self.model, self.td, triple)
        self.assertFalse(passed)
        self.assertIn("does not vanish on X1(1,1)", reason)

    def test_both_signs(self):
        triple = SrrTriple(pplus=frozenset({self.p(1, 1)}), pminus=frozenset({self.p(2, 2)}))
        passed, reason = is_srr(self.model, self.td, triple)
        self.assertFalse(passed)
        self.assertIn("Both sets", reason)

    def test_module_outside_its_tube(self):
        with self.assertRaisesRegex(ValueError, "is not a module of tube 1"):
            is_srr(self.model, self.td, SrrTriple(modules=frozenset({TubeModule(1, 3, 1)})))

    def test_projective_closure(self):
        diagonal = SrrTriple(pplus=frozenset({self.p(1, 1), self.p(2, 2)}))
        self.assertEqual(tp(diagonal.pplus), frozenset({(1, 1), (1, 2), (2, 1), (2, 2)}))
        self.assertFalse(is_projectively_closed(self.model, self.td, diagonal))
        closed = projective_closure(self.model, self.td, diagonal)
        self.assertEqual({p.choice for p in closed.pplus}, set(all_choices(self.td)))
        self.assertEqual(pc(self.model, self.td, [(1, 2), (2, 1)]), frozenset({self.p(2, 1)}))

    def test_diagonal_pairs_do_not_form_a_fan(self):
        first = cone_hull([self.p(1, 1).vec, self.p(2, 2).vec])
        second = cone_hull([self.p(1, 2).vec, self.p(2, 1).vec])
        report = verify_fan([first, second])
        self.assertFalse(report["passed"])
        self.assertIn("intersection_is_face", {violation["check"] for violation in report["violations"]})

    def test_label(self):
        self.assertEqual(self.imaginary_cluster().label(), "X1(1,1) + X2(1,1) + p(1,1)")
        self.assertEqual(SrrTriple().label(), "0")


class TestNakayamaCorrespondence(unittest.TestCase):
    def setUp(self):
        self.model = build_model(Quiver.from_text(TWO_TUBES))
        self.td = tube_data(self.model)
        self.stt = SttObject(modules=frozenset({NakModule(1, 1), projective(2, 1)}), shifted=frozenset())
        self.cluster = iota(self.model, self.td, [self.stt, self.stt], "positive")

    def test_iota(self):
        self.assertEqual(self.cluster.modules, frozenset({TubeModule(1, 1, 1), TubeModule(2, 1, 1)}))
        self.assertEqual({p.choice for p in self.cluster.pplus}, {(1, 1)})
        self.assertFalse(self.cluster.pminus)

    def test_rho_inverts_iota(self):
        for tube in (1, 2):
            self.assertEqual(rho(self.model, self.td, self.cluster, tube), self.stt)

    def test_negative_iota(self):
        stt = SttObject(modules=frozenset({NakModule(1, 1)}), shifted=frozenset({projective(2, 2)}))
        triple = iota(self.model, self.td, [stt, stt], "negative")
        self.assertEqual({p.choice for p in triple.pminus}, {(2, 2)})
        self.assertTrue(is_cluster(self.model, self.td, triple))

    def test_iota_errors(self):
        with self.assertRaisesRegex(ValueError, "sign must be"):
            iota(self.model, self.td, [self.stt, self.stt], "zero")
        with self.assertRaisesRegex(ValueError, "one object per exceptional tube"):
            iota(self.model, self.td, [self.stt], "positive")
        with self.assertRaisesRegex(ValueError, "has projective summands"):
            iota(self.model, self.td, [self.stt, self.stt], "negative")

    def test_composition_hypothesis(self):
        bare = SttObject(modules=frozenset({NakModule(1, 1)}), shifted=frozenset())
        self.assertTrue(composition_hypothesis([self.stt, self.stt], [2, 2], "positive"))
        self.assertFalse(composition_hypothesis([self.stt, bare], [2, 2], "positive"))
        self.assertTrue(composition_hypothesis([bare, bare], [2, 2], "positive"))

    def test_inclusion_checks(self):
        report = inclusion_checks(self.model, self.td, self.cluster, [self.stt, self.stt], "positive")
        self.assertTrue(report["passed"], report["violations"])
        smaller = SrrTriple(modules=frozenset({TubeModule(1, 1, 1)}), pplus=self.cluster.pplus)
        report = inclusion_checks(self.model, self.td, smaller, [self.stt, self.stt], "positive")
        self.assertTrue(report["passed"], report["violations"])

    def test_inclusion_checks_need_a_matching_sign(self):
        with self.assertRaisesRegex(ValueError, "carries no negative projective vectors"):
            inclusion_checks(self.model, self.td, self.cluster, [self.stt, self.stt], "negative")


class TestTransportationCoefficients(unittest.TestCase):
    def setUp(self):
        self.model = build_model(Quiver.from_text(TWO_TUBES))
        self.td = tube_data(self.model)
        self.vectors = [projective_vector(self.model, self.td, choice) for choice in all_choices(self.td)]

    def test_balanced_point(self):
        point = tuple(a + b for a, b in zip(self.vectors[0].vec, self.vectors[3].vec))
        coefficients = transportation_coefficients(self.model, self.td, self.vectors, point)
        self.assertEqual(coefficients, {choice: Fraction(1, 2) for choice in all_choices(self.td)})

    def test_single_vector(self):
        coefficients = transportation_coefficients(self.model, self.td, self.vectors[:1], self.vectors[0].vec)
        self.assertEqual(coefficients, {(1, 1): 1})

    def test_negative_pairing(self):
        point = tuple(-value for value in self.vectors[0].vec)
        with self.assertRaisesRegex(ValueError, "pairs negatively"):
            transportation_coefficients(self.model, self.td, self.vectors, point)

    def test_point_outside_the_cone(self):
        with self.assertRaisesRegex(ValueError, "is not in the cone"):
            transportation_coefficients(self.model, self.td, self.vectors[:1], self.vectors[1].vec)


@pytest.mark.parametrize("text", [TWO_TUBES, "4; 1>2,2>3,3>4,1>4", "3; 2>1,3>2,3>1"])
@pytest.mark.parametrize(
    "samples",
    [
        pytest.param(100, id="quick"),
        pytest.param(
            1000,
            id="full",
            marks=pytest.mark.skipif(not FULL_SAMPLING, reason="Set WALLCHAMBER_FULL_SAMPLING to run 1000 samples!"),
        ),
    ],
)
def test_points_of_the_projective_cone_are_transportation_plans(text, samples):
    model = build_model(Quiver.from_text(text))
    td = tube_data(model)
    vectors = [projective_vector(model, td, choice) for choice in all_choices(td)]
    rng = np.random.default_rng(5)
    for _ in range(samples):
        weights = rng.integers(0, 6, size=len(vectors))
        point = tuple(
            sum((int(weight) * p.vec[index] for weight, p in zip(weights, vectors)), Fraction(0))
            for index in range(model.n)
        )
        coefficients = transportation_coefficients(model, td, vectors, point)
        assert all(value >= 0 for value in coefficients.values())
        assert sum(coefficients.values(), Fraction(0)) == sum(a * b for a, b in zip(point, td.eta))
