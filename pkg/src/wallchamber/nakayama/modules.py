from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import FrozenSet, Iterable, List, Optional, Tuple

import networkx as nx

from ..utils.types import RatVec


def _cyclic(index: int, r: int) -> int:
    """Reduce a 1-based vertex index modulo r."""
    return (index - 1) % r + 1


def check_rank(r: int) -> None:
    if not isinstance(r, int) or r < 1:
        raise ValueError(f"The Nakayama rank must be a positive integer; got {r}!")


@dataclass(frozen=True, order=True)
class NakModule:
    """The indecomposable Y_{j,l} of the self-injective Nakayama algebra: socle S(j), length l."""

    socle: int
    length: int

    def is_projective(self, r: int) -> bool:
        return self.length == r + 1

    def is_brick(self, r: int) -> bool:
        return self.length <= r

    def top(self, r: int) -> int:
        return _cyclic(self.socle + self.length - 1, r)

    def composition_factors(self, r: int) -> Tuple[int, ...]:
        """Vertices of the composition factors, from the socle up."""
        return tuple(_cyclic(self.socle + k, r) for k in range(self.length))

    def label(self) -> str:
        return f"Y({self.socle},{self.length})"


def check_module(r: int, module: NakModule) -> None:
    check_rank(r)
    if not (1 <= module.socle <= r and 1 <= module.length <= r + 1):
        raise ValueError(f"{module.label()} is not an indecomposable module of Lambda_{r}!")


def projective(r: int, vertex: int) -> NakModule:
    """P(i) = Y_{i, r+1}; its top and socle are both S(i)."""
    return NakModule(socle=_cyclic(vertex, r), length=r + 1)


def simple(r: int, vertex: int) -> NakModule:
    return NakModule(socle=_cyclic(vertex, r), length=1)


def indecomposables(r: int) -> List[NakModule]:
    check_rank(r)
    return [NakModule(socle=j, length=length) for j in range(1, r + 1) for length in range(1, r + 2)]


def bricks(r: int) -> List[NakModule]:
    return [module for module in indecomposables(r) if module.is_brick(r)]


def tau(r: int, module: NakModule) -> Optional[NakModule]:
    """tau Y_{j,l} = Y_{j-1,l}; projectives have tau zero (returned as None)."""
    check_module(r, module)
    if module.is_projective(r):
        return None
    return NakModule(socle=_cyclic(module.socle - 1, r), length=module.length)


def dim_vector(r: int, module: NakModule) -> RatVec:
    check_module(r, module)
    counts = [0] * r
    for vertex in module.composition_factors(r):
        counts[vertex - 1] += 1
    return tuple(Fraction(count) for count in counts)


def g_vector(r: int, module: NakModule, shifted: bool = False) -> RatVec:
    """
    g-vector of Y_{j,l} (or of a shifted projective P(i)[1]).

    g(P(i)) = e_i, g(P(i)[1]) = -e_i and g(Y_{j,l}) = e_{j+l-1} - e_{j-1} otherwise.
    """
    check_module(r, module)
    vector = [Fraction(0)] * r
    if shifted:
        if not module.is_projective(r):
            raise ValueError(f"Only projectives can be shifted; {module.label()} is not projective over Lambda_{r}.")
        vector[module.socle - 1] = Fraction(-1)
    elif module.is_projective(r):
        vector[module.socle - 1] = Fraction(1)
    else:
        vector[module.top(r) - 1] += 1
        vector[_cyclic(module.socle - 1, r) - 1] -= 1
    return tuple(vector)


def is_tau_rigid_indecomposable(r: int, module: NakModule) -> bool:
    """Closed-form criterion: Y_{j,l} is tau-rigid iff l < r or it is projective."""
    check_module(r, module)
    return module.length < r or module.is_projective(r)


class NullSign(str, Enum):
    BOTH = "Both"
    NONNEGATIVE_ONLY = "NonnegativeOnly"
    NONPOSITIVE_ONLY = "NonpositiveOnly"


@dataclass(frozen=True)
class SttObject:
    """A support tau-rigid object M + P[1]: modules M and the shifted projectives P."""

    modules: FrozenSet[NakModule] = frozenset()
    shifted: FrozenSet[NakModule] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "modules", frozenset(self.modules))
        object.__setattr__(self, "shifted", frozenset(self.shifted))

    @classmethod
    def from_summands(cls, summands: Iterable[Tuple[NakModule, bool]]) -> "SttObject":
        summands = list(summands)
        return cls(
            modules=frozenset(module for module, shifted in summands if not shifted),
            shifted=frozenset(module for module, shifted in summands if shifted),
        )

    @property
    def summands(self) -> Tuple[Tuple[NakModule, bool], ...]:
        return tuple(sorted([(module, False) for module in self.modules] + [(module, True) for module in self.shifted]))

    def __len__(self) -> int:
        return len(self.modules) + len(self.shifted)

    def encode(self) -> Tuple[Tuple[int, int, bool], ...]:
        """Canonical sorted encoding used for deduplication and comparison."""
        return tuple((module.socle, module.length, shifted) for module, shifted in self.summands)

    def label(self) -> str:
        parts = [module.label() for module in sorted(self.modules)]
        parts += [f"{module.label()}[1]" for module in sorted(self.shifted)]
        return " + ".join(parts) if parts else "0"


def ar_quiver(r: int) -> nx.DiGraph:
    """
    Auslander-Reiten quiver of Lambda_r.

    Irreducible maps are the inclusions Y_{j,l} -> Y_{j,l+1} (l <= r) and the quotients
    Y_{j,l} -> Y_{j+1,l-1} (l >= 2); the translate is stored in the node attribute "tau".
    """
    graph = nx.DiGraph()
    for module in indecomposables(r):
        graph.add_node(module, tau=tau(r, module), projective=module.is_projective(r))
    for module in indecomposables(r):
        if module.length <= r:
            graph.add_edge(module, NakModule(module.socle, module.length + 1), kind="inclusion")
        if module.length >= 2:
            graph.add_edge(module, NakModule(_cyclic(module.socle + 1, r), module.length - 1), kind="quotient")
    return graph
