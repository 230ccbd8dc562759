"""Cones of support regular rigid triples and the fan they form inside g(eta)^perp."""
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from tqdm import tqdm

from .clusters import enumerate_closed_triples, enumerate_clusters
from .triples import SrrTriple, tp
from ..exactgeom.arrangement import covers, verify_fan
from ..exactgeom.cone import Cone, cone_hull
from ..exactgeom.linalg import as_vec, dot, vec_scale, vec_sum
from ..exceptions import InvariantViolation
from ..quivercore.model import HereditaryModel
from ..tame.domains import regular_space
from ..tame.projective import ProjectiveVector, g0
from ..tame.tubes import TubeData
from ..utils.dict import DeepDict
from ..utils.report import make_report, merge_reports, record_violation
from ..utils.types import RatVec


@dataclass(frozen=True)
class SrrCone:
    triple: SrrTriple
    cone: Cone


def corner_labels(model: HereditaryModel, td: TubeData, triple: SrrTriple) -> List[Tuple[str, RatVec]]:
    """The generators of the cone of a triple, each with a printable name."""
    corners = [(f"g0({module.label()})", g0(model, td, module)) for module in sorted(triple.modules)]
    corners += [(p.label(), p.vec) for p in sorted(triple.pplus, key=lambda p: p.choice)]
    corners += [("-" + p.label(), vec_scale(-1, p.vec)) for p in sorted(triple.pminus, key=lambda p: p.choice)]
    return corners


def cone_of(model: HereditaryModel, td: TubeData, triple: SrrTriple) -> Cone:
    return cone_hull([vec for _, vec in corner_labels(model, td, triple)], ambient_dim=model.n)


def expected_cone_dim(td: TubeData, triple: SrrTriple) -> int:
    """|M| without projective vectors, otherwise 1 - m + sum_i |rho_i|."""
    if not triple.projective_vectors:
        return len(triple.modules)
    return 1 - len(td.tubes) + len(triple.modules) + len(tp(triple.projective_vectors))


def build_srr_fan(
    model: HereditaryModel, td: TubeData, display_progress: bool = False
) -> Tuple[List[SrrCone], DeepDict]:
    """
    Cones of every projectively closed triple, checked to form a complete fan in g(eta)^perp.

    Raises InvariantViolation when any check fails; the report is returned alongside the cones.
    """
    clusters = enumerate_clusters(model, td, display_progress=display_progress)
    triples = enumerate_closed_triples(model, td, clusters=clusters, display_progress=display_progress)
    cones = [
        SrrCone(triple=triple, cone=cone_of(model, td, triple))
        for triple in tqdm(triples, desc="Building triple cones", disable=not display_progress)
    ]

    dims = make_report()
    by_cone: Dict[Cone, SrrTriple] = {}
    for srr_cone in cones:
        expected = expected_cone_dim(td, srr_cone.triple)
        if srr_cone.cone.dim != expected:
            record_violation(
                dims, "cone_dim", triple=srr_cone.triple.label(), dim=srr_cone.cone.dim, expected_dim=expected
            )
        previous = by_cone.setdefault(srr_cone.cone, srr_cone.triple)
        if previous != srr_cone.triple:
            record_violation(dims, "distinct_cones", triples=[previous.label(), srr_cone.triple.label()])

    completeness = make_report(cluster_count=len(clusters))
    cluster_set = set(clusters)
    cluster_cones = [srr_cone.cone for srr_cone in cones if srr_cone.triple in cluster_set]
    if not covers(regular_space(td), cluster_cones):
        record_violation(completeness, "complete")
    for srr_cone in cones:
        if srr_cone.triple in cluster_set and srr_cone.cone.dim != model.n - 1:
            record_violation(completeness, "cluster_dim", triple=srr_cone.triple.label())

    report = merge_reports(
        [
            ("fan", verify_fan((srr_cone.cone for srr_cone in cones), display_progress=display_progress)),
            ("dimensions", dims),
            ("completeness", completeness),
        ],
        quiver=model.quiver.to_text(),
        ranks=list(td.ranks),
        triple_count=len(triples),
    )
    if not report["passed"]:
        raise InvariantViolation(f"The triple cones of '{model.quiver}' do not form a fan: {report['violations']}")
    return cones, report


def transportation_coefficients(
    model: HereditaryModel, td: TubeData, pvectors: Sequence[ProjectiveVector], point: Sequence
) -> Dict[tuple, Fraction]:
    """
    Write a point of the cone spanned by the given p(X) as a nonnegative combination of them.

    With lambda_ij = point.dim X^i_{j,1} and S their common row sum, the coefficient of p(X) is
    S^{1-m} times the product of the lambda_{i,x_i}.
    """
    point = as_vec(point)
    weights = []
    for tube in td.tubes:
        weights.append([dot(point, d) for d in tube.quasi_simple_dims])
    if any(value < 0 for row in weights for value in row):
        raise ValueError(f"{[str(value) for value in point]} pairs negatively with a quasi-simple!")
    total = dot(point, td.eta)
    if any(sum(row, Fraction(0)) != total for row in weights):
        raise ValueError("The quasi-simple pairings of the point do not share a row sum!")

    m = len(td.tubes)
    coefficients = {}
    for p in pvectors:
        coefficient = Fraction(1) if total == 0 else total ** (1 - m)
        for index, socle in enumerate(p.choice):
            coefficient *= weights[index][socle - 1]
        coefficients[p.choice] = coefficient
    reconstruction = vec_sum((vec_scale(coefficients[p.choice], p.vec) for p in pvectors), model.n)
    if reconstruction != point:
        raise ValueError(f"{[str(value) for value in point]} is not in the cone of the given projective vectors!")
    return coefficients

