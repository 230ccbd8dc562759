"""
Two descriptions of the walls near a point v: the infinitesimal domain, which asks whether
v + eps * w stays in D(Y) for some eps > 0, and the v-perp domain, which only looks at the
submodules whose inequality is tight at v. Both are evaluated exactly over Lambda_r.
"""
from typing import Sequence

from ..exactgeom.cone import lex_pair_nonpositive
from ..exactgeom.linalg import as_vec, dot
from ..nakayama.domains import domain
from ..nakayama.modules import NakModule, dim_vector


def _submodule_dims(r: int, module: NakModule):
    return [dim_vector(r, NakModule(module.socle, length)) for length in range(1, module.length)]


def _check_base_point(r: int, module: NakModule, v) -> None:
    if not domain(r, module).contains(v):
        raise ValueError(f"{[str(value) for value in v]} does not lie in D({module.label()}) over Lambda_{r}!")


def infinitesimal_membership(r: int, w: Sequence, module: NakModule, v: Sequence) -> bool:
    """
    True iff v + eps * w lies in D(Y) for some eps > 0.

    Each constraint is evaluated on the pair (v.c, w.c) in the lexicographic order, which decides the
    sign of (v + eps * w).c for all sufficiently small eps at once.
    """
    v, w = as_vec(v), as_vec(w)
    _check_base_point(r, module, v)
    if dot(w, dim_vector(r, module)) != 0:
        return False
    return all(lex_pair_nonpositive(dot(v, c), dot(w, c)) for c in _submodule_dims(r, module))


def vperp_domain_membership(r: int, w: Sequence, module: NakModule, v: Sequence) -> bool:
    """w in D_{v^perp}(Y): w.dim Y = 0 and w.dim Y' <= 0 for the submodules Y' with v.dim Y' = 0."""
    v, w = as_vec(v), as_vec(w)
    _check_base_point(r, module, v)
    if dot(w, v) != 0:
        raise ValueError(f"{[str(value) for value in w]} is not orthogonal to the base point!")
    if dot(w, dim_vector(r, module)) != 0:
        return False
    return all(dot(w, c) <= 0 for c in _submodule_dims(r, module) if dot(v, c) == 0)
