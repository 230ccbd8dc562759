from dataclasses import dataclass
from fractions import Fraction
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

import cdd

from .linalg import (
    as_vec,
    canonical_basis,
    dot,
    identity,
    is_zero,
    mat_vec,
    nullspace,
    primitive,
    project_out,
    transpose,
    vec_scale,
    vec_sum,
)
from ..utils.types import RatVec


def _cdd_matrix(rep_type, linear_rows: Sequence[RatVec], rows: Sequence[RatVec], ambient_dim: int) -> "cdd.Matrix":
    """A cdd matrix in fraction mode for a homogeneous description, linear rows first."""
    blocks = [
        ([(0,) + tuple(row) for row in block], linear)
        for block, linear in ((linear_rows, True), (rows, False))
        if block
    ]
    if rep_type == cdd.RepType.GENERATOR:
        # cdd reads generators as conv(points) + cone(rays); the apex is the only point
        blocks.append(([(1,) + (0,) * ambient_dim], False))
    (entries, linear), rest = blocks[0], blocks[1:]
    matrix = cdd.Matrix(entries, linear=linear, number_type="fraction")
    for entries, linear in rest:
        matrix.extend(entries, linear=linear)
    matrix.rep_type = rep_type
    return matrix


def _checked(ambient_dim: int, rows: Iterable[Sequence], kind: str) -> List[RatVec]:
    checked = []
    for row in rows:
        row = as_vec(row)
        if len(row) != ambient_dim:
            raise ValueError(f"{kind} {row} does not live in R^{ambient_dim}!")
        if not is_zero(row):
            checked.append(row)
    return checked


def double_description(
    ambient_dim: int, equations: Iterable[Sequence], inequalities: Iterable[Sequence]
) -> Tuple[List[RatVec], List[RatVec]]:
    """Convert {x : e.x = 0, h.x <= 0} into a lineality basis and a set of extreme rays."""
    equations = _checked(ambient_dim, equations, "Constraint")
    inequalities = _checked(ambient_dim, inequalities, "Constraint")
    if not equations and not inequalities:
        return list(identity(ambient_dim)), []

    # cdd reads a row (b, a) as b + a.x >= 0
    matrix = _cdd_matrix(
        cdd.RepType.INEQUALITY, equations, [vec_scale(-1, row) for row in inequalities], ambient_dim
    )
    generators = cdd.Polyhedron(matrix).get_generators()
    lineality, rays = [], []
    for index in range(generators.row_size):
        kind, *vector = generators[index]
        vector = as_vec(vector)
        if kind != 0 or is_zero(vector):
            continue
        (lineality if index in generators.lin_set else rays).append(vector)
    return lineality, rays


def facet_description(ambient_dim: int, generators: Iterable[Sequence]) -> Tuple[List[RatVec], List[RatVec]]:
    """Convert cone(generators) into equations e.x = 0 and irredundant facet inequalities h.x <= 0."""
    generators = _checked(ambient_dim, generators, "Generator")
    if not generators:
        return list(identity(ambient_dim)), []

    constraints = cdd.Polyhedron(_cdd_matrix(cdd.RepType.GENERATOR, [], generators, ambient_dim)).get_inequalities()
    constraints.canonicalize()
    equations, inequalities = [], []
    for index in range(constraints.row_size):
        _, *normal = constraints[index]
        normal = as_vec(normal)
        if is_zero(normal):
            continue
        if index in constraints.lin_set:
            equations.append(normal)
        else:
            inequalities.append(vec_scale(-1, normal))
    return equations, inequalities


class Cone:
    """
    A rational polyhedral cone {x : e.x = 0 for e in equations, h.x <= 0 for h in inequalities}.

    Both representations are kept in canonical form: equations are a row-reduced basis of span(C)^perp,
    inequalities are the facet normals projected into span(C), and rays are the extreme rays taken modulo
    the lineality space. Every vector is a primitive integer vector and every list is sorted, so that two
    cones compare equal exactly when they are the same set.
    """

    __slots__ = ("_ambient_dim", "_equations", "_inequalities", "_lineality", "_rays")

    def __init__(
        self,
        ambient_dim: int,
        equations: Tuple[RatVec, ...],
        inequalities: Tuple[RatVec, ...],
        lineality: Tuple[RatVec, ...],
        rays: Tuple[RatVec, ...],
    ):
        self._ambient_dim = ambient_dim
        self._equations = equations
        self._inequalities = inequalities
        self._lineality = lineality
        self._rays = rays

    @classmethod
    def from_generators(cls, ambient_dim: int, generators: Iterable[Sequence]) -> "Cone":
        generators = [as_vec(generator) for generator in generators]
        for generator in generators:
            if len(generator) != ambient_dim:
                raise ValueError(f"Generator {generator} does not live in R^{ambient_dim}!")

        raw_equations, raw_inequalities = facet_description(ambient_dim, generators)
        equations = canonical_basis(raw_equations, ambient_dim)
        inequalities = tuple(sorted({primitive(project_out(row, equations)) for row in raw_inequalities}))
        lineality = canonical_basis(nullspace(equations + inequalities, ambient_dim), ambient_dim)

        _, extreme_rays = double_description(ambient_dim, equations=equations, inequalities=inequalities)
        rays = {primitive(project_out(ray, lineality)) for ray in extreme_rays}
        rays.discard(tuple(Fraction(0) for _ in range(ambient_dim)))
        return cls(ambient_dim, equations, inequalities, lineality, tuple(sorted(rays)))

    @classmethod
    def from_constraints(
        cls, ambient_dim: int, equations: Iterable[Sequence] = (), inequalities: Iterable[Sequence] = ()
    ) -> "Cone":
        lineality, rays = double_description(ambient_dim, equations=equations, inequalities=inequalities)
        generators = lineality + [vec_scale(-1, line) for line in lineality] + rays
        return cls.from_generators(ambient_dim, generators)

    @classmethod
    def zero(cls, ambient_dim: int) -> "Cone":
        return cls.from_generators(ambient_dim, ())

    @classmethod
    def linear_subspace(cls, ambient_dim: int, equations: Iterable[Sequence]) -> "Cone":
        return cls.from_constraints(ambient_dim, equations=equations)

    @property
    def ambient_dim(self) -> int:
        return self._ambient_dim

    @property
    def equations(self) -> Tuple[RatVec, ...]:
        return self._equations

    @property
    def inequalities(self) -> Tuple[RatVec, ...]:
        return self._inequalities

    @property
    def lineality(self) -> Tuple[RatVec, ...]:
        return self._lineality

    @property
    def rays(self) -> Tuple[RatVec, ...]:
        return self._rays

    @property
    def generators(self) -> Tuple[RatVec, ...]:
        return self._rays + self._lineality + tuple(vec_scale(-1, line) for line in self._lineality)

    @property
    def dim(self) -> int:
        return self._ambient_dim - len(self._equations)

    def is_pointed(self) -> bool:
        """True when the cone contains no line (strict convexity)."""
        return not self._lineality

    def is_linear_subspace(self) -> bool:
        return not self._inequalities

    def contains(self, point: Sequence) -> bool:
        return all(dot(row, point) == 0 for row in self._equations) and all(
            dot(row, point) <= 0 for row in self._inequalities
        )

    def contains_in_relative_interior(self, point: Sequence) -> bool:
        return all(dot(row, point) == 0 for row in self._equations) and all(
            dot(row, point) < 0 for row in self._inequalities
        )

    def contains_cone(self, other: "Cone") -> bool:
        return all(self.contains(generator) for generator in other.generators)

    def interior_point(self) -> RatVec:
        """A point of the relative interior (the sum of the extreme rays)."""
        return vec_sum(self._rays, self._ambient_dim)

    def span(self) -> "Cone":
        return Cone.linear_subspace(self._ambient_dim, self._equations)

    def intersection(self, other: "Cone") -> "Cone":
        if other.ambient_dim != self._ambient_dim:
            raise ValueError(
                f"Cannot intersect cones in R^{self._ambient_dim} and R^{other.ambient_dim}; ambient dimensions differ!"
            )
        return Cone.from_constraints(
            self._ambient_dim,
            equations=self._equations + other.equations,
            inequalities=self._inequalities + other.inequalities,
        )

    def with_constraints(self, equations: Iterable[Sequence] = (), inequalities: Iterable[Sequence] = ()) -> "Cone":
        return Cone.from_constraints(
            self._ambient_dim,
            equations=self._equations + tuple(as_vec(row) for row in equations),
            inequalities=self._inequalities + tuple(as_vec(row) for row in inequalities),
        )

    def crossed_by(self, normal: Sequence) -> bool:
        """True when the hyperplane normal.x = 0 meets the relative interior of the cone in a proper way."""
        values = [dot(normal, generator) for generator in self.generators]
        return any(value > 0 for value in values) and any(value < 0 for value in values)

    def pullback(self, matrix: Sequence[Sequence]) -> "Cone":
        """The cone {y : matrix y in C} for a (ambient_dim x k) matrix."""
        columns = transpose(matrix)
        return Cone.from_constraints(
            len(columns),
            equations=[mat_vec(columns, row) for row in self._equations],
            inequalities=[mat_vec(columns, row) for row in self._inequalities],
        )

    def linear_image(self, matrix: Sequence[Sequence]) -> "Cone":
        """The image of the cone under x -> matrix x."""
        return Cone.from_generators(len(matrix), [mat_vec(matrix, generator) for generator in self.generators])

    def facets(self) -> Tuple[Tuple[RatVec, "Cone"], ...]:
        return tuple((normal, self.with_constraints(equations=[normal])) for normal in self._inequalities)

    def faces(self) -> FrozenSet["Cone"]:
        found = {self}
        frontier = [self]
        while frontier:
            cone = frontier.pop()
            for _, facet in cone.facets():
                if facet not in found:
                    found.add(facet)
                    frontier.append(facet)
        return frozenset(found)

    def _key(self):
        return self._ambient_dim, self._equations, self._inequalities

    def __eq__(self, other) -> bool:
        return isinstance(other, Cone) and self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __lt__(self, other: "Cone") -> bool:
        return (self.dim, self._key()) < (other.dim, other._key())

    def __repr__(self) -> str:
        rays = [tuple(str(value) for value in ray) for ray in self._rays]
        return f"Cone(ambient_dim={self._ambient_dim}, dim={self.dim}, rays={rays}, lineality={len(self._lineality)})"


@dataclass(frozen=True)
class LabeledCone:
    """A wall together with the dimension vector labelling it."""

    cone: Cone
    label: RatVec
    module_id: Optional[str] = None
    is_null: bool = False

    def __post_init__(self):
        label = as_vec(self.label)
        if any(value < 0 or value.denominator != 1 for value in label):
            raise ValueError(f"Wall label {label} is not a nonnegative integer vector!")
        object.__setattr__(self, "label", label)

    def sort_key(self):
        return self.label, self.cone.dim, self.cone._key(), self.module_id or ""


def cone_hull(generators: Iterable[Sequence], ambient_dim: Optional[int] = None) -> Cone:
    generators = [as_vec(generator) for generator in generators]
    dims = {len(generator) for generator in generators}
    if ambient_dim is not None:
        dims.add(ambient_dim)
    if len(dims) != 1:
        raise ValueError(f"Generators do not share an ambient dimension (found {sorted(dims)})!")
    return Cone.from_generators(dims.pop(), generators)


def cone_intersect(first: Cone, second: Cone) -> Cone:
    return first.intersection(second)


def cone_dim(cone: Cone) -> int:
    return cone.dim


def is_face(face: Cone, cone: Cone) -> bool:
    """True iff face = cone intersected with some subset of its defining hyperplanes."""
    if face.ambient_dim != cone.ambient_dim or not cone.contains_cone(face):
        return False
    generators = face.generators
    tight = [row for row in cone.inequalities if all(dot(row, generator) == 0 for generator in generators)]
    return face == cone.with_constraints(equations=tight)


def lex_pair_nonpositive(first: Fraction, second: Fraction) -> bool:
    """(first, second) <=_lex (0, 0)."""
    return first < 0 or (first == 0 and second <= 0)
