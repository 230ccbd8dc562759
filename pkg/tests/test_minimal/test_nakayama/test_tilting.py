import unittest
from fractions import Fraction

from parameterized import param, parameterized

from wallchamber.exactgeom import rank, verify_wall_chamber
from wallchamber.exactgeom.cone import LabeledCone
from wallchamber.nakayama import (
    NakModule,
    NullSign,
    SttObject,
    bricks,
    complete_to_stt,
    dim_vector,
    domain,
    enumerate_stt,
    exchange_partner,
    g_cone,
    g_vector,
    is_support_tau_rigid,
    is_support_tau_tilting,
    left_subsum_start,
    null_sign,
    projective,
    semistable_bricks,
    simple,
    stt_exchange_graph,
)
from wallchamber.nakayama.tilting import _enumerate_by_mutation, _enumerate_by_subsets

STT_COUNTS = [param(1, 2), param(2, 6), param(3, 20), param(4, 70), param(5, 252)]


def nakayama_walls(r):
    return [LabeledCone(cone=domain(r, brick), label=dim_vector(r, brick)) for brick in bricks(r)]


class TestEnumeration(unittest.TestCase):
    @parameterized.expand(STT_COUNTS)
    def test_counts(self, r, count):
        self.assertEqual(len(enumerate_stt(r)), count)

    @parameterized.expand(STT_COUNTS)
    def test_subset_search_matches_the_exchange_graph(self, r, count):
        by_subsets = {stt.encode() for stt in _enumerate_by_subsets(r)}
        by_mutation = {stt.encode() for stt in _enumerate_by_mutation(r)}
        self.assertEqual(len(by_subsets), count)
        self.assertEqual(by_subsets, by_mutation)

    def test_every_object_is_tilting(self):
        for r in (2, 3):
            for stt in enumerate_stt(r):
                self.assertEqual(len(stt), r)
                self.assertTrue(is_support_tau_tilting(r, stt))
                vectors = [g_vector(r, module, shifted) for module, shifted in stt.summands]
                self.assertEqual(rank(vectors, r), r)

    def test_exchange_graph_is_regular(self):
        for r, objects in ((2, 6), (3, 20)):
            graph = stt_exchange_graph(r)
            self.assertEqual(graph.number_of_nodes(), objects)
            self.assertEqual(graph.number_of_edges(), objects * r // 2)
            for _, _, brick in graph.edges(data="brick"):
                self.assertIn(brick, bricks(r))

    def test_exchange_partner_is_an_involution(self):
        for stt in enumerate_stt(3):
            for summand in stt.summands:
                partner = exchange_partner(3, stt, summand)
                self.assertNotEqual(partner, stt)
                missing = next(member for member in partner.summands if member not in stt.summands)
                self.assertEqual(exchange_partner(3, partner, missing), stt)


class TestRigidity(unittest.TestCase):
    def test_simple_pair(self):
        self.assertTrue(is_support_tau_rigid(2, SttObject(modules={simple(2, 1)})))
        # Hom(S(2), tau S(2)) = Hom(S(2), S(1)) = 0, but Hom(S(1), tau S(2)) = Hom(S(1), S(1)) is not
        self.assertFalse(is_support_tau_rigid(2, SttObject(modules={simple(2, 1), simple(2, 2)})))

    def test_shifted_summands_must_be_projective(self):
        self.assertFalse(is_support_tau_rigid(2, SttObject(shifted={simple(2, 1)})))

    def test_shift_kills_homs(self):
        # Hom(P(1), S(1)) is nonzero
        self.assertFalse(is_support_tau_rigid(2, SttObject(modules={simple(2, 1)}, shifted={projective(2, 1)})))
        self.assertTrue(is_support_tau_rigid(2, SttObject(modules={simple(2, 1)}, shifted={projective(2, 2)})))


class TestNullSign(unittest.TestCase):
    def test_signs(self):
        algebra = SttObject(modules={projective(3, vertex) for vertex in (1, 2, 3)})
        shifted = SttObject(shifted={projective(3, vertex) for vertex in (1, 2, 3)})
        self.assertEqual(null_sign(3, algebra), NullSign.NONNEGATIVE_ONLY)
        self.assertEqual(null_sign(3, shifted), NullSign.NONPOSITIVE_ONLY)
        self.assertEqual(null_sign(3, SttObject(modules={simple(3, 1)})), NullSign.BOTH)

    def test_completion_of_the_empty_object(self):
        self.assertEqual(complete_to_stt(2, [], "positive"), SttObject(modules={projective(2, 1), projective(2, 2)}))
        self.assertEqual(complete_to_stt(2, [], "negative"), SttObject(shifted={projective(2, 1), projective(2, 2)}))

    def test_completion_keeps_the_partial_object(self):
        for sign in ("positive", "negative"):
            stt = complete_to_stt(3, [NakModule(1, 2)], sign)
            self.assertIn(NakModule(1, 2), stt.modules)
            self.assertTrue(is_support_tau_tilting(3, stt))

    def test_completion_sign(self):
        with self.assertRaisesRegex(ValueError, "sign must be"):
            complete_to_stt(2, [], "zero")


class TestDomains(unittest.TestCase):
    def test_domain_of_a_simple(self):
        cone = domain(2, simple(2, 1))
        self.assertEqual(cone.dim, 1)
        self.assertTrue(cone.is_linear_subspace())

    def test_domain_needs_a_brick(self):
        with self.assertRaisesRegex(ValueError, "not a brick"):
            domain(2, projective(2, 1))

    def test_semistable_bricks(self):
        self.assertEqual(semistable_bricks(2, (1, -1)), [NakModule(2, 2)])

    def test_left_subsum_start(self):
        self.assertEqual(left_subsum_start((1, -2, 1)), 2)
        self.assertEqual(left_subsum_start((-1, 1)), 1)
        with self.assertRaisesRegex(ValueError, "do not sum to zero"):
            left_subsum_start((1, 1))

    def test_picture_of_rank_two(self):
        structure = verify_wall_chamber(nakayama_walls(2))
        self.assertTrue(structure.verified)
        self.assertEqual(len(structure.walls), 4)
        self.assertEqual(len(structure.chambers), 6)

    def test_chambers_are_g_vector_cones(self):
        for r in (2, 3):
            structure = verify_wall_chamber(nakayama_walls(r), check_closure=False)
            self.assertTrue(structure.verified)
            self.assertEqual(set(structure.chambers), {g_cone(r, stt) for stt in enumerate_stt(r)})

    def test_domains_lie_in_the_brick_hyperplane(self):
        for brick in bricks(3):
            for generator in domain(3, brick).generators:
                self.assertEqual(sum(a * b for a, b in zip(generator, dim_vector(3, brick))), Fraction(0))
