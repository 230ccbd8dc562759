from typing import List, Sequence

from .tubes import TubeData, TubeModule, check_tube_module
from ..exactgeom.cone import Cone, LabeledCone
from ..exactgeom.linalg import as_vec, dot, vec_sum
from ..quivercore.model import HereditaryModel
from ..utils.types import RatVec


def tube_module_dim(td: TubeData, module: TubeModule) -> RatVec:
    """dim X^i_{j,l} = d_j + d_{j+1} + ... + d_{j+l-1}, quasi-simple indices taken cyclically."""
    check_tube_module(td, module)
    return vec_sum((td.quasi_simple(module.tube, module.socle + k) for k in range(module.qlen)), td.n)


def _regular_submodules(module: TubeModule) -> List[TubeModule]:
    return [TubeModule(module.tube, module.socle, length) for length in range(1, module.qlen)]


def tube_bricks(td: TubeData) -> List[TubeModule]:
    return [
        TubeModule(tube=index, socle=socle, qlen=qlen)
        for index, tube in enumerate(td.tubes, start=1)
        for socle in range(1, tube.rank + 1)
        for qlen in range(1, tube.rank + 1)
    ]


def regular_domain(td: TubeData, module: TubeModule) -> Cone:
    """
    D_reg(X^i_{j,l}) inside g(eta)^perp.

    The regular submodules of X^i_{j,l} are the X^i_{j,l'} with l' < l, so the domain is cut out by
    w.dim X = 0 and w.dim X^i_{j,l'} <= 0.
    """
    check_tube_module(td, module)
    if not module.is_brick(td):
        raise ValueError(f"{module.label()} is not a brick; its quasi-length exceeds the tube rank!")
    return Cone.from_constraints(
        td.n,
        equations=[td.g_eta, tube_module_dim(td, module)],
        inequalities=[tube_module_dim(td, submodule) for submodule in _regular_submodules(module)],
    )


def d_reg_eta(model: HereditaryModel, td: TubeData) -> Cone:
    """The null wall eta^perp intersected with g(eta)^perp."""
    return Cone.linear_subspace(model.n, [td.eta, td.g_eta])


def vperp_membership(td: TubeData, w: Sequence, module: TubeModule) -> bool:
    """w in D_{g(eta)^perp}(X), evaluated directly on the chain of regular submodules."""
    w = as_vec(w)
    if dot(w, td.g_eta) != 0:
        raise ValueError(f"{[str(value) for value in w]} is not orthogonal to g(eta)!")
    check_tube_module(td, module)
    if not module.is_brick(td):
        raise ValueError(f"{module.label()} is not a brick; its quasi-length exceeds the tube rank!")
    if dot(w, tube_module_dim(td, module)) != 0:
        return False
    return all(dot(w, tube_module_dim(td, submodule)) <= 0 for submodule in _regular_submodules(module))


def regular_semistable_bricks(td: TubeData, w: Sequence) -> List[TubeModule]:
    """Exceptional tube bricks X that are w-regular semistable."""
    return [module for module in tube_bricks(td) if vperp_membership(td, w, module)]


def regular_space(td: TubeData) -> Cone:
    return Cone.linear_subspace(td.n, [td.g_eta])


def regular_walls(model: HereditaryModel, td: TubeData) -> List[LabeledCone]:
    """The walls of the regular structure: every exceptional tube brick together with the null wall."""
    walls = [
        LabeledCone(cone=regular_domain(td, module), label=tube_module_dim(td, module), module_id=module.label())
        for module in tube_bricks(td)
    ]
    walls.append(LabeledCone(cone=d_reg_eta(model, td), label=td.eta, module_id="eta", is_null=True))
    return walls
