import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

from tqdm import tqdm

from ..exactgeom.cone import Cone
from ..exactgeom.linalg import as_vec, canonical_basis, is_zero, nullspace
from ..utils.types import RatMatrix, RatVec


@dataclass(frozen=True)
class Functional:
    covec: RatVec

    def __post_init__(self):
        object.__setattr__(self, "covec", as_vec(self.covec))
        if is_zero(self.covec):
            raise ValueError("Co-amalgamation needs a nonzero linear functional!")

    @property
    def ambient_dim(self) -> int:
        return len(self.covec)


@dataclass(frozen=True)
class Factor:
    """
    A set of cones in R^k together with the functional used to glue it.

    space_equations cut out the linear subspace the cones live in; it is empty (all of R^k) except for
    factors that are themselves products.
    """

    cones: Tuple[Cone, ...]
    functional: Functional
    space_equations: Tuple[RatVec, ...] = ()

    def __post_init__(self):
        cones = tuple(sorted(set(self.cones)))
        for cone in cones:
            if cone.ambient_dim != self.functional.ambient_dim:
                raise ValueError(
                    f"Cone in R^{cone.ambient_dim} does not match the functional on R^{self.functional.ambient_dim}!"
                )
        object.__setattr__(self, "cones", cones)

    @property
    def ambient_dim(self) -> int:
        return self.functional.ambient_dim


def _pad(vector: Sequence, offset: int, total: int) -> RatVec:
    padded = [Fraction(0)] * total
    padded[offset : offset + len(vector)] = vector
    return tuple(padded)


@dataclass(frozen=True)
class CoamalgProduct:
    """
    The co-amalgamated product of m factors, stored in the product coordinates R^{n_1 + ... + n_m}.

    Delta is cut out by phi_1(v_1) = phi_i(v_i) for i = 2..m; every stored cone lies inside Delta.
    """

    factors: Tuple[Factor, ...]
    delta_equations: Tuple[RatVec, ...]
    delta_basis: Tuple[RatVec, ...]
    cones: FrozenSet[Cone]

    @property
    def ambient_dim(self) -> int:
        return sum(factor.ambient_dim for factor in self.factors)

    @property
    def offsets(self) -> Tuple[int, ...]:
        return tuple(itertools.accumulate([0] + [factor.ambient_dim for factor in self.factors[:-1]]))

    def delta(self) -> Cone:
        return Cone.linear_subspace(self.ambient_dim, self.delta_equations)

    def lift(self, index: int, cone: Cone) -> Cone:
        """{x in Delta : x_index in cone} for a cone of the index-th factor (0-based)."""
        offset, total = self.offsets[index], self.ambient_dim
        return Cone.from_constraints(
            total,
            equations=list(self.delta_equations) + [_pad(row, offset, total) for row in cone.equations],
            inequalities=[_pad(row, offset, total) for row in cone.inequalities],
        )

    def block(self, vector: Sequence, index: int) -> RatVec:
        offset = self.offsets[index]
        return tuple(vector[offset : offset + self.factors[index].ambient_dim])

    def as_factor(self) -> Factor:
        """The product seen as a factor, glued along phi_1 of its first block."""
        return Factor(
            cones=tuple(self.cones),
            functional=Functional(_pad(self.factors[0].functional.covec, 0, self.ambient_dim)),
            space_equations=self.delta_equations,
        )


def delta_equations(factors: Sequence[Factor]) -> Tuple[RatVec, ...]:
    total = sum(factor.ambient_dim for factor in factors)
    offsets = list(itertools.accumulate([0] + [factor.ambient_dim for factor in factors[:-1]]))
    first = _pad(factors[0].functional.covec, 0, total)
    gluing = [
        tuple(a - b for a, b in zip(first, _pad(factor.functional.covec, offset, total)))
        for factor, offset in zip(factors[1:], offsets[1:])
    ]
    spaces = [_pad(row, offset, total) for factor, offset in zip(factors, offsets) for row in factor.space_equations]
    return tuple(spaces + gluing)


def coamalg(factors: Iterable[Factor], display_progress: bool = False) -> CoamalgProduct:
    """
    Co-amalgamate the factors: every lift V~ of a factor cone and every intersection of lifts taken
    from distinct factors.
    """
    factors = tuple(factors)
    if not factors:
        raise ValueError("Co-amalgamation needs at least one factor!")
    equations = delta_equations(factors)
    total = sum(factor.ambient_dim for factor in factors)
    product = CoamalgProduct(
        factors=factors,
        delta_equations=equations,
        delta_basis=canonical_basis(nullspace(equations, total), total),
        cones=frozenset(),
    )

    lifts: List[List[Optional[Cone]]] = [
        [None] + [product.lift(index, cone) for cone in factor.cones] for index, factor in enumerate(factors)
    ]
    cones = set()
    combinations = list(itertools.product(*lifts))
    for combination in tqdm(combinations, desc="Intersecting lifted cones", disable=not display_progress):
        chosen = [cone for cone in combination if cone is not None]
        if not chosen:
            continue
        cone = chosen[0]
        for other in chosen[1:]:
            cone = cone.intersection(other)
        cones.add(cone)
    return CoamalgProduct(
        factors=factors, delta_equations=equations, delta_basis=product.delta_basis, cones=frozenset(cones)
    )


def _permutation_matrix(blocks: Sequence[int], order: Sequence[int]) -> RatMatrix:
    """Matrix sending (x_0, ..., x_{m-1}) to (x_{order[0]}, ..., x_{order[m-1]})."""
    offsets = list(itertools.accumulate([0] + list(blocks[:-1])))
    total = sum(blocks)
    rows = []
    for index in order:
        for k in range(blocks[index]):
            rows.append(tuple(Fraction(int(column == offsets[index] + k)) for column in range(total)))
    return tuple(rows)


def coamalg_commute_check(first: Factor, second: Factor) -> bool:
    """The coordinate swap carries first (-) second onto second (-) first."""
    forward, backward = coamalg([first, second]), coamalg([second, first])
    swap = _permutation_matrix([first.ambient_dim, second.ambient_dim], [1, 0])
    return {cone.linear_image(swap) for cone in forward.cones} == set(backward.cones)


def coamalg_associativity_check(first: Factor, second: Factor, third: Factor) -> bool:
    """(first (-) second) (-) third and first (-) (second (-) third) both equal the threefold product."""
    flat = coamalg([first, second, third]).cones
    left = coamalg([coamalg([first, second]).as_factor(), third]).cones
    right = coamalg([first, coamalg([second, third]).as_factor()]).cones
    return left == flat and right == flat
