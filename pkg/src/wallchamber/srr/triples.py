"""Support regular rigid triples and the maps rho_i / iota that relate them to Lambda_r."""
import itertools
from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Literal, Optional, Sequence, Set, Tuple

from ..exceptions import InvariantViolation
from ..nakayama.modules import NakModule, SttObject, projective
from ..nakayama.tilting import is_support_tau_rigid, is_support_tau_tilting, summands_compatible
from ..exactgeom.linalg import dot
from ..quivercore.model import HereditaryModel
from ..tame.domains import tube_module_dim
from ..tame.projective import ProjectiveVector, check_choice, projective_vector
from ..tame.tubes import TubeData, TubeModule, check_tube_module
from ..utils.dict import DeepDict
from ..utils.report import make_report, record_violation

QuasiSimple = Tuple[int, int]
Sign = Literal["positive", "negative"]


@dataclass(frozen=True)
class SrrTriple:
    """(M, P+, P-): regular tube modules M and two sets of projective vectors."""

    modules: FrozenSet[TubeModule] = frozenset()
    pplus: FrozenSet[ProjectiveVector] = frozenset()
    pminus: FrozenSet[ProjectiveVector] = frozenset()

    def __post_init__(self):
        for name in ("modules", "pplus", "pminus"):
            object.__setattr__(self, name, frozenset(getattr(self, name)))

    @property
    def projective_vectors(self) -> FrozenSet[ProjectiveVector]:
        return self.pplus | self.pminus

    def encode(self) -> tuple:
        return (
            tuple((module.tube, module.socle, module.qlen) for module in sorted(self.modules)),
            tuple(sorted(p.choice for p in self.pplus)),
            tuple(sorted(p.choice for p in self.pminus)),
        )

    def contains(self, other: "SrrTriple") -> bool:
        return other.modules <= self.modules and other.pplus <= self.pplus and other.pminus <= self.pminus

    def label(self) -> str:
        parts = [module.label() for module in sorted(self.modules)]
        parts += [p.label() for p in sorted(self.pplus, key=lambda p: p.choice)]
        parts += ["-" + p.label() for p in sorted(self.pminus, key=lambda p: p.choice)]
        return " + ".join(parts) if parts else "0"


def tp(vectors: Iterable[ProjectiveVector]) -> FrozenSet[QuasiSimple]:
    """Quasi-simples (tube, socle) occurring in the choices of the given projective vectors."""
    return frozenset((tube, socle) for p in vectors for tube, socle in enumerate(p.choice, start=1))


def pc(model: HereditaryModel, td: TubeData, quasi_simples: Iterable[QuasiSimple]) -> FrozenSet[ProjectiveVector]:
    """All p(X) whose choice X is drawn from the given quasi-simples, one per tube."""
    quasi_simples = set(quasi_simples)
    per_tube = [
        sorted(socle for tube, socle in quasi_simples if tube == index) for index in range(1, len(td.tubes) + 1)
    ]
    return frozenset(projective_vector(model, td, choice) for choice in itertools.product(*per_tube))


def _tube_hom_free(td: TubeData, first: TubeModule, second: TubeModule) -> bool:
    """Hom(first, tau second) = 0 and Hom(second, tau first) = 0, computed over Lambda_r."""
    if first.tube != second.tube:
        return True
    r = td.tube(first.tube).rank
    summand_a = (NakModule(first.socle, first.qlen), False)
    summand_b = (NakModule(second.socle, second.qlen), False)
    return summands_compatible(r, summand_a, summand_b)


def srr_failure(model: HereditaryModel, td: TubeData, triple: SrrTriple) -> Optional[str]:
    """The first violated support regular rigid condition, or None."""
    for module in triple.modules:
        check_tube_module(td, module)
        if not module.is_tau_rigid(td):
            return f"{module.label()} is not tau-rigid: its quasi-length reaches the tube rank."
    for p in triple.projective_vectors:
        check_choice(td, p.choice)
    modules = sorted(triple.modules)
    for a, first in enumerate(modules):
        for second in modules[a:]:
            if not _tube_hom_free(td, first, second):
                return f"Hom({first.label()}, tau {second.label()}) or its reverse is nonzero."
    for module in modules:
        translate = TubeModule(module.tube, (module.socle - 2) % td.tube(module.tube).rank + 1, module.qlen)
        for p in triple.pplus:
            if dot(p.vec, tube_module_dim(td, translate)) != 0:
                return f"{p.label()} does not vanish on tau {module.label()}."
        for p in triple.pminus:
            if dot(p.vec, tube_module_dim(td, module)) != 0:
                return f"-{p.label()} does not vanish on {module.label()}."
    if triple.pplus and triple.pminus:
        return "Both sets of projective vectors are nonempty."
    return None


def is_srr(model: HereditaryModel, td: TubeData, triple: SrrTriple) -> Tuple[bool, Optional[str]]:
    reason = srr_failure(model, td, triple)
    return reason is None, reason


def _require_srr(model: HereditaryModel, td: TubeData, triple: SrrTriple) -> None:
    reason = srr_failure(model, td, triple)
    if reason is not None:
        raise ValueError(f"{triple.label()} is not support regular rigid: {reason}")


def is_projectively_closed(model: HereditaryModel, td: TubeData, triple: SrrTriple) -> bool:
    return triple.pplus == pc(model, td, tp(triple.pplus)) and triple.pminus == pc(model, td, tp(triple.pminus))


def projective_closure(model: HereditaryModel, td: TubeData, triple: SrrTriple) -> SrrTriple:
    _require_srr(model, td, triple)
    return SrrTriple(
        modules=triple.modules,
        pplus=pc(model, td, tp(triple.pplus)),
        pminus=pc(model, td, tp(triple.pminus)),
    )


def rho(model: HereditaryModel, td: TubeData, triple: SrrTriple, tube: int) -> SttObject:
    """
    The support tau-rigid object of Lambda_{r_i} attached to tube i.

    Tube-i summands X_{j,l} become Y_{j,l}; each chosen quasi-simple X_{j,1} of P+ (resp. P-) adds the
    projective Y_{j,r_i+1} (resp. its shift).
    """
    _require_srr(model, td, triple)
    r = td.tube(tube).rank
    modules = {NakModule(module.socle, module.qlen) for module in triple.modules if module.tube == tube}
    modules |= {projective(r, socle) for index, socle in tp(triple.pplus) if index == tube}
    shifted = {projective(r, socle) for index, socle in tp(triple.pminus) if index == tube}
    return SttObject(modules=frozenset(modules), shifted=frozenset(shifted))


def _check_sign(r: int, stt: SttObject, sign: Sign) -> None:
    if sign == "positive" and stt.shifted:
        raise ValueError(f"{stt.label()} has shifted summands; it is not null-nonnegative over Lambda_{r}!")
    if sign == "negative" and any(module.is_projective(r) for module in stt.modules):
        raise ValueError(f"{stt.label()} has projective summands; it is not null-nonpositive over Lambda_{r}!")


def iota(model: HereditaryModel, td: TubeData, objects: Sequence[SttObject], sign: Sign) -> SrrTriple:
    """
    The projectively closed triple built from one support tau-rigid object per tube.

    Non-projective module summands Y_{j,l} of tube i give X^i_{j,l}; the projective (for positive) or
    shifted (for negative) summands Y_{j,r_i+1} give the quasi-simples Y, and pc(Y) is attached on the
    corresponding side.
    """
    if sign not in ("positive", "negative"):
        raise ValueError(f"sign must be 'positive' or 'negative'; got '{sign}'!")
    if len(objects) != len(td.tubes):
        raise ValueError(f"Expected one object per exceptional tube ({len(td.tubes)}); got {len(objects)}!")
    modules: Set[TubeModule] = set()
    quasi_simples: Set[QuasiSimple] = set()
    for index, (tube, stt) in enumerate(zip(td.tubes, objects), start=1):
        if not is_support_tau_rigid(tube.rank, stt):
            raise ValueError(f"{stt.label()} is not support tau-rigid over Lambda_{tube.rank}!")
        _check_sign(tube.rank, stt, sign)
        for module in stt.modules:
            if module.is_projective(tube.rank):
                quasi_simples.add((index, module.socle))
            else:
                modules.add(TubeModule(index, module.socle, module.length))
        if sign == "negative":
            quasi_simples |= {(index, module.socle) for module in stt.shifted}
    vectors = pc(model, td, quasi_simples)
    if sign == "positive":
        return SrrTriple(modules=frozenset(modules), pplus=vectors)
    return SrrTriple(modules=frozenset(modules), pminus=vectors)


def is_cluster(model: HereditaryModel, td: TubeData, triple: SrrTriple) -> bool:
    """Projectively closed with every rho_i support tau-tilting."""
    if srr_failure(model, td, triple) is not None or not is_projectively_closed(model, td, triple):
        return False
    return all(
        is_support_tau_tilting(tube.rank, rho(model, td, triple, index))
        for index, tube in enumerate(td.tubes, start=1)
    )


def composition_hypothesis(objects: Sequence[SttObject], ranks: Sequence[int], sign: Sign) -> bool:
    """Either every component carries a projective (shifted, for negative) summand or none does."""
    if sign == "positive":
        flags = [any(module.is_projective(r) for module in stt.modules) for stt, r in zip(objects, ranks)]
    else:
        flags = [bool(stt.shifted) for stt in objects]
    return all(flags) or not any(flags)


def _stt_contains(bigger: SttObject, smaller: SttObject) -> bool:
    return smaller.modules <= bigger.modules and smaller.shifted <= bigger.shifted


def inclusion_checks(
    model: HereditaryModel, td: TubeData, triple: SrrTriple, objects: Sequence[SttObject], sign: Sign
) -> DeepDict:
    """
    Containment equivalences between a triple and a tuple of support tau-rigid objects of one sign.

    iota(objects) contains the triple exactly when every rho_i(triple) lies in the i-th object; and when
    the triple contains iota(objects) and the tuple satisfies the composition hypothesis, every rho_i
    contains the i-th object.
    """
    _require_srr(model, td, triple)
    if sign not in sign_of(triple):
        raise ValueError(f"{triple.label()} carries no {sign} projective vectors to compare with!")
    ranks = td.ranks
    report = make_report(sign=sign)
    image = iota(model, td, objects, sign)
    images = [rho(model, td, triple, index) for index in range(1, len(ranks) + 1)]
    contained = all(_stt_contains(stt, image_i) for stt, image_i in zip(objects, images))
    if image.contains(triple) != contained:
        record_violation(report, "iota_contains", triple=triple.label())
    if triple.contains(image) and composition_hypothesis(objects, ranks, sign):
        if not all(_stt_contains(image_i, stt) for stt, image_i in zip(objects, images)):
            record_violation(report, "rho_contains", triple=triple.label())
    return report


def sign_of(triple: SrrTriple) -> List[Sign]:
    """The null signs the triple carries; a triple without projective vectors has both."""
    if triple.pplus:
        return ["positive"]
    if triple.pminus:
        return ["negative"]
    return ["positive", "negative"]


def check_is_cluster(model: HereditaryModel, td: TubeData, triple: SrrTriple) -> None:
    if not is_cluster(model, td, triple):
        raise InvariantViolation(f"{triple.label()} is not a support regular cluster.")
