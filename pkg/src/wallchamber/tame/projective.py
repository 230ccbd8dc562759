import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from .domains import tube_module_dim
from .tubes import TubeData, TubeModule, check_tube_module
from ..exactgeom.linalg import dot, solve_affine, vec_scale, vec_sub
from ..exceptions import InvariantViolation
from ..nakayama.modules import NakModule
from ..quivercore.model import HereditaryModel, g_from_dim
from ..utils.types import RatVec

Choice = Tuple[int, ...]


@dataclass(frozen=True)
class ProjectiveVector:
    """p(X) for a choice X of one quasi-simple per exceptional tube, given by its socle indices."""

    choice: Choice
    vec: RatVec

    def label(self) -> str:
        return "p(" + ",".join(str(index) for index in self.choice) + ")"


def check_choice(td: TubeData, choice: Sequence[int]) -> Choice:
    choice = tuple(int(index) for index in choice)
    if len(choice) != len(td.tubes):
        raise ValueError(f"A choice needs one quasi-simple per exceptional tube ({len(td.tubes)}); got {choice}!")
    for index, (tube, socle) in enumerate(zip(td.tubes, choice), start=1):
        if not 1 <= socle <= tube.rank:
            raise ValueError(f"Socle index {socle} is out of range for tube {index} of rank {tube.rank}!")
    return choice


def all_choices(td: TubeData) -> List[Choice]:
    return list(itertools.product(*(range(1, tube.rank + 1) for tube in td.tubes)))


def projective_vector(model: HereditaryModel, td: TubeData, choice: Sequence[int]) -> ProjectiveVector:
    """
    The unique p with p.eta = 1, p in g(eta)^perp and p orthogonal to every quasi-simple outside the choice.

    p.dim X^i_{j,l} is then the multiplicity of the chosen quasi-simple of tube i in X^i_{j,l}.
    """
    choice = check_choice(td, choice)
    rows = [td.eta, td.g_eta]
    rhs = [Fraction(1), Fraction(0)]
    for tube, chosen in zip(td.tubes, choice):
        for socle, d in enumerate(tube.quasi_simple_dims, start=1):
            if socle != chosen:
                rows.append(d)
                rhs.append(Fraction(0))
    solution = solve_affine(rows, rhs)
    if solution is None or solution.kernel_basis:
        raise InvariantViolation(f"The projective vector for {choice} over '{model.quiver}' is not unique.")
    return ProjectiveVector(choice=choice, vec=solution.particular)


def g0(model: HereditaryModel, td: TubeData, module: TubeModule) -> RatVec:
    """Projection of g(X) onto g(eta)^perp; it pairs with regular dimension vectors like g(X)."""
    g = g_from_dim(model, tube_module_dim(td, module))
    g_eta = td.g_eta
    return vec_sub(g, vec_scale(dot(g, g_eta) / dot(g_eta, g_eta), g_eta))


def long_hom_module(td: TubeData, choice: Sequence[int], tube: int, qlen: int) -> TubeModule:
    """The quasi-length qlen module of the given tube whose quasi-top is the chosen quasi-simple."""
    choice = check_choice(td, choice)
    rank = td.tube(tube).rank
    if not 1 <= qlen <= rank:
        raise ValueError(f"Quasi-length {qlen} must lie between 1 and the tube rank {rank}!")
    return TubeModule(tube=tube, socle=(choice[tube - 1] - qlen) % rank + 1, qlen=qlen)


def nakayama_counterpart(td: TubeData, module: TubeModule) -> Tuple[int, NakModule]:
    """The Lambda_r-module Y_{j,l} corresponding to X^i_{j,l} in a tube of rank r."""
    check_tube_module(td, module)
    rank = td.tube(module.tube).rank
    if module.qlen > rank + 1:
        raise ValueError(f"{module.label()} has no counterpart over Lambda_{rank}!")
    return rank, NakModule(socle=module.socle, length=module.qlen)
