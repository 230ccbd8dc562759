"""Explicit matrix representations of Lambda_r-modules and exact Hom computations."""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, List, Tuple

from .modules import NakModule, check_module
from ..exactgeom.linalg import nullspace, rank


@dataclass(frozen=True)
class Representation:
    """
    A representation of the cyclic quiver r -> r-1 -> ... -> 1 -> r (0-based vertices internally).

    basis_vertex[k] is the vertex carrying the k-th basis vector and basis_local[k] its position among
    the basis vectors at that vertex. maps[u] is the matrix of the arrow (u+1 mod r) -> u.
    """

    r: int
    basis_vertex: Tuple[int, ...]
    basis_local: Tuple[int, ...]
    maps: Tuple[Tuple[Tuple[Fraction, ...], ...], ...]

    def dim_at(self, vertex: int) -> int:
        return sum(1 for value in self.basis_vertex if value == vertex)

    def global_index(self, vertex: int, local: int) -> int:
        for index, (value, position) in enumerate(zip(self.basis_vertex, self.basis_local)):
            if value == vertex and position == local:
                return index
        raise IndexError(f"No basis vector {local} at vertex {vertex}.")


@lru_cache(maxsize=None)
def representation(r: int, module: NakModule) -> Representation:
    """Y_{j,l} with basis b_0..b_{l-1}; b_k sits at vertex j+k and each arrow sends b_k to b_{k-1}."""
    check_module(r, module)
    basis_vertex = tuple((module.socle - 1 + k) % r for k in range(module.length))
    basis_local = tuple(k // r for k in range(module.length))
    dims = [basis_vertex.count(u) for u in range(r)]
    maps = []
    for target in range(r):
        source = (target + 1) % r
        matrix = [[Fraction(0)] * dims[source] for _ in range(dims[target])]
        for k in range(1, module.length):
            if basis_vertex[k] == source:
                matrix[basis_local[k - 1]][basis_local[k]] = Fraction(1)
        maps.append(tuple(tuple(row) for row in matrix))
    return Representation(r=r, basis_vertex=basis_vertex, basis_local=basis_local, maps=tuple(maps))


def _unknown_layout(domain: Representation, codomain: Representation):
    offsets, total = [], 0
    for u in range(domain.r):
        offsets.append(total)
        total += codomain.dim_at(u) * domain.dim_at(u)
    return offsets, total


@lru_cache(maxsize=None)
def intertwiner_basis(r: int, first: NakModule, second: NakModule) -> Tuple[Tuple[Tuple[Fraction, ...], ...], ...]:
    """
    Basis of Hom(first, second) as a list of maps, each a tuple over vertices of (dim second_u x dim first_u) matrices.

    A family (f_u) is a morphism iff second(a) f_{s(a)} = f_{t(a)} first(a) for every arrow a.
    """
    domain, codomain = representation(r, first), representation(r, second)
    offsets, total = _unknown_layout(domain, codomain)
    if total == 0:
        return ()

    def unknown(vertex: int, row: int, column: int) -> int:
        return offsets[vertex] + row * domain.dim_at(vertex) + column

    equations: List[List[Fraction]] = []
    for target in range(r):
        source = (target + 1) % r
        for p in range(codomain.dim_at(target)):
            for q in range(domain.dim_at(source)):
                equation = [Fraction(0)] * total
                for t in range(codomain.dim_at(source)):
                    coefficient = codomain.maps[target][p][t]
                    if coefficient:
                        equation[unknown(source, t, q)] += coefficient
                for t in range(domain.dim_at(target)):
                    coefficient = domain.maps[target][t][q]
                    if coefficient:
                        equation[unknown(target, p, t)] -= coefficient
                if any(equation):
                    equations.append(equation)

    maps = []
    for solution in nullspace(equations, total):
        blocks = []
        for u in range(r):
            rows, columns = codomain.dim_at(u), domain.dim_at(u)
            blocks.append(
                tuple(tuple(solution[unknown(u, row, column)] for column in range(columns)) for row in range(rows))
            )
        maps.append(tuple(blocks))
    return tuple(maps)


def hom_dim(r: int, first: NakModule, second: NakModule) -> int:
    """dim_K Hom(first, second), computed from the intertwiner equations."""
    check_module(r, first)
    check_module(r, second)
    return len(intertwiner_basis(r, first, second))


def _image_vectors(r: int, source: NakModule, target: NakModule) -> List[Tuple[Fraction, ...]]:
    domain, codomain = representation(r, source), representation(r, target)
    vectors = []
    for blocks in intertwiner_basis(r, source, target):
        for vertex, local in zip(domain.basis_vertex, domain.basis_local):
            image = [Fraction(0)] * len(codomain.basis_vertex)
            for row in range(codomain.dim_at(vertex)):
                value = blocks[vertex][row][local]
                if value:
                    image[codomain.global_index(vertex, row)] = value
            vectors.append(tuple(image))
    return vectors


def trace_submodule_length(r: int, modules: Iterable[NakModule], target: NakModule) -> int:
    """Length of the trace of add(modules) in target: the span of all images of maps into target."""
    vectors = []
    for module in modules:
        vectors.extend(_image_vectors(r, module, target))
    return rank(vectors, target.length) if vectors else 0


def fac_contains(r: int, modules: Iterable[NakModule], target: NakModule) -> bool:
    """target is in Fac(add modules) iff its trace is all of target."""
    return trace_submodule_length(r, list(modules), target) == target.length


def fac_included(r: int, smaller: Iterable[NakModule], larger: Iterable[NakModule]) -> bool:
    """Fac(smaller) is contained in Fac(larger)."""
    larger = list(larger)
    return all(fac_contains(r, larger, module) for module in smaller)
