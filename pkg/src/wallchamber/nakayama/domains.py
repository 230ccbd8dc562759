from fractions import Fraction
from functools import lru_cache
from typing import List, Sequence

from .modules import NakModule, bricks, check_module, dim_vector
from ..exactgeom.cone import Cone
from ..exactgeom.linalg import as_vec


@lru_cache(maxsize=None)
def domain(r: int, module: NakModule) -> Cone:
    """
    Semi-invariant domain D(Y_{j,l}) = {v : v.dim Y_{j,l} = 0, v.dim Y_{j,l'} <= 0 for l' < l}.

    The submodules of the uniserial Y_{j,l} are exactly the Y_{j,l'}.
    """
    check_module(r, module)
    if not module.is_brick(r):
        raise ValueError(f"{module.label()} is not a brick of Lambda_{r}; it has no semi-invariant domain.")
    submodules = [NakModule(module.socle, length) for length in range(1, module.length)]
    return Cone.from_constraints(
        r,
        equations=[dim_vector(r, module)],
        inequalities=[dim_vector(r, submodule) for submodule in submodules],
    )


def semistable_bricks(r: int, v: Sequence) -> List[NakModule]:
    """Bricks Y with v in D(Y)."""
    v = as_vec(v)
    return [brick for brick in bricks(r) if domain(r, brick).contains(v)]


def bricks_containing(r: int, cone: Cone) -> List[NakModule]:
    return [brick for brick in bricks(r) if domain(r, brick).contains_cone(cone)]


def left_subsum_start(values: Sequence) -> int:
    """
    Smallest 1-based index i such that every left subsum of the cyclic window a_i, ..., a_{i+r-1} is <= 0.

    The prefix sums S_0 = 0, S_k = a_1 + ... + a_k repeat with period r because the entries sum to zero;
    the window starting after the first maximal prefix sum has only nonpositive left subsums.
    """
    values = as_vec(values)
    if not values:
        raise ValueError("Cannot scan an empty sequence!")
    if sum(values, Fraction(0)) != 0:
        raise ValueError(f"The entries of {[str(value) for value in values]} do not sum to zero!")
    prefix_sums = [Fraction(0)]
    for value in values[:-1]:
        prefix_sums.append(prefix_sums[-1] + value)
    return prefix_sums.index(max(prefix_sums)) + 1
