import os
from fractions import Fraction

import numpy as np
import pytest

from wallchamber.exactgeom import Cone, LabeledCone, dot, verify_wall_chamber
from wallchamber.nakayama import bricks, dim_vector, domain
from wallchamber.quivercore import Quiver, build_model
from wallchamber.tame import regular_space, regular_walls, tube_data

FULL_SAMPLING = os.getenv("WALLCHAMBER_FULL_SAMPLING", "") != ""
SAMPLE_COUNTS = [
    pytest.param(100, id="quick"),
    pytest.param(
        1000,
        id="full",
        marks=pytest.mark.skipif(not FULL_SAMPLING, reason="Set WALLCHAMBER_FULL_SAMPLING to run 1000 samples!"),
    ),
]


def random_generators(rng, ambient_dim):
    count = int(rng.integers(1, 6))
    return rng.integers(-3, 4, size=(count, ambient_dim)).tolist()


@pytest.mark.parametrize("samples", SAMPLE_COUNTS)
def test_cone_round_trip(samples):
    rng = np.random.default_rng(0)
    for _ in range(samples):
        ambient_dim = int(rng.integers(2, 5))
        cone = Cone.from_generators(ambient_dim, random_generators(rng, ambient_dim))
        assert Cone.from_constraints(ambient_dim, cone.equations, cone.inequalities) == cone
        assert Cone.from_generators(ambient_dim, cone.generators) == cone
        assert cone.dim == ambient_dim - len(cone.equations)


@pytest.mark.parametrize("samples", SAMPLE_COUNTS)
def test_membership_agrees_with_the_hull(samples):
    rng = np.random.default_rng(1)
    for _ in range(samples):
        ambient_dim = int(rng.integers(2, 5))
        generators = random_generators(rng, ambient_dim)
        cone = Cone.from_generators(ambient_dim, generators)
        point = rng.integers(-3, 4, size=ambient_dim).tolist()
        assert cone.contains(point) == (Cone.from_generators(ambient_dim, generators + [point]) == cone), point


def nakayama_structure():
    walls = [LabeledCone(cone=domain(3, brick), label=dim_vector(3, brick)) for brick in bricks(3)]
    return verify_wall_chamber(walls, check_closure=False)


def regular_structure():
    model = build_model(Quiver.from_text("3; 2>1,3>2,3>1"))
    td = tube_data(model)
    return verify_wall_chamber(regular_walls(model, td), space=regular_space(td), check_closure=False)


def interior_point(rng, chamber):
    point = tuple(Fraction(0) for _ in range(chamber.ambient_dim))
    for generator in chamber.generators:
        weight = int(rng.integers(1, 5))
        point = tuple(value + weight * entry for value, entry in zip(point, generator))
    return point


def crossing_point(first, second, wall):
    """The point where the segment from first to second meets the hyperplane of the wall, if it does so strictly."""
    a, b = dot(first, wall.label), dot(second, wall.label)
    if a * b >= 0:
        return None
    return tuple((b * x - a * y) / (b - a) for x, y in zip(first, second))


@pytest.fixture(scope="module", params=["nakayama", "regular"])
def structure(request):
    structure = nakayama_structure() if request.param == "nakayama" else regular_structure()
    assert structure.verified, structure.report["violations"]
    return structure


@pytest.mark.parametrize("samples", SAMPLE_COUNTS)
def test_segments_inside_a_chamber_cross_no_wall(structure, samples):
    rng = np.random.default_rng(2)
    for _ in range(samples):
        index = int(rng.integers(0, len(structure.chambers)))
        chamber = structure.chambers[index]
        first, second = interior_point(rng, chamber), interior_point(rng, chamber)
        assert structure.chamber_index(first) == index
        assert structure.chamber_index(second) == index
        for wall in structure.walls:
            point = crossing_point(first, second, wall)
            assert point is None or not wall.cone.contains(point), (chamber, wall.label)
