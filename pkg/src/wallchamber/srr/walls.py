from dataclasses import dataclass
from typing import List, Optional, Tuple

from tqdm import tqdm

from .clusters import enumerate_clusters
from .cones import cone_of, corner_labels
from .triples import SrrTriple, rho
from ..exactgeom.arrangement import verify_wall_chamber
from ..exactgeom.cone import Cone
from ..exactgeom.linalg import dot, vec_scale
from ..exceptions import InvariantViolation
from ..nakayama.modules import SttObject, projective
from ..nakayama.tilting import exchange_brick, exchange_partner, is_support_tau_tilting
from ..quivercore.model import HereditaryModel
from ..tame.domains import d_reg_eta, regular_domain, regular_space, regular_walls
from ..tame.projective import g0
from ..tame.tubes import TubeData, TubeModule
from ..utils.dict import DeepDict
from ..utils.report import make_report, merge_reports, record_violation


@dataclass(frozen=True)
class WallLabel:
    """
    A facet of a cluster cone with the wall it lies in.

    Non-null facets carry the tube brick whose regular domain contains them. Null facets lie in the
    null wall and carry, per tube, the quasi-length r_i brick covering them.
    """

    face: Cone
    brick: Optional[TubeModule] = None
    is_null: bool = False
    covering: Tuple[TubeModule, ...] = ()

    def label(self) -> str:
        if self.is_null:
            return "null[" + ", ".join(module.label() for module in self.covering) + "]"
        return self.brick.label()


def _facet_triple(model: HereditaryModel, td: TubeData, cluster: SrrTriple, normal) -> SrrTriple:
    """The subtriple whose generators lie on the facet with the given normal."""
    on_facet = lambda vec: dot(normal, vec) == 0  # noqa: E731
    return SrrTriple(
        modules=frozenset(module for module in cluster.modules if on_facet(g0(model, td, module))),
        pplus=frozenset(p for p in cluster.pplus if on_facet(p.vec)),
        pminus=frozenset(p for p in cluster.pminus if on_facet(vec_scale(-1, p.vec))),
    )


def _null_covering(model: HereditaryModel, td: TubeData, face_triple: SrrTriple) -> Tuple[TubeModule, ...]:
    covering = []
    for index, tube in enumerate(td.tubes, start=1):
        remaining = rho(model, td, face_triple, index)
        vertices = [
            vertex
            for vertex in range(1, tube.rank + 1)
            if is_support_tau_tilting(
                tube.rank,
                SttObject(modules=remaining.modules, shifted=remaining.shifted | {projective(tube.rank, vertex)}),
            )
        ]
        if len(vertices) != 1:
            raise InvariantViolation(
                f"{remaining.label()} over Lambda_{tube.rank} has {len(vertices)} completions by a shifted projective."
            )
        covering.append(TubeModule(tube=index, socle=vertices[0], qlen=tube.rank))
    return tuple(covering)


def _exchange_label(model: HereditaryModel, td: TubeData, cluster: SrrTriple, face_triple: SrrTriple) -> TubeModule:
    shrunk = []
    for index, tube in enumerate(td.tubes, start=1):
        if len(rho(model, td, face_triple, index)) == tube.rank - 1:
            shrunk.append(index)
    if len(shrunk) != 1:
        raise InvariantViolation(f"The facet {face_triple.label()} of {cluster.label()} shrinks {len(shrunk)} tubes.")
    index = shrunk[0]
    rank = td.tube(index).rank
    full = rho(model, td, cluster, index)
    removed = [summand for summand in full.summands if summand not in rho(model, td, face_triple, index).summands]
    partner = exchange_partner(rank, full, removed[0])
    brick = exchange_brick(rank, full, partner)
    return TubeModule(tube=index, socle=brick.socle, qlen=brick.length)


def wall_labels(model: HereditaryModel, td: TubeData, cluster: SrrTriple) -> List[WallLabel]:
    """
    Label every facet of the cone of a cluster.

    A facet keeping projective vectors lies in the domain of the exchange brick of the one tube that
    lost a summand. A facet without projective vectors lies in the null wall.
    """
    labels = []
    for normal, facet in cone_of(model, td, cluster).facets():
        face_triple = _facet_triple(model, td, cluster, normal)
        if not face_triple.projective_vectors:
            covering = _null_covering(model, td, face_triple)
            if not d_reg_eta(model, td).contains_cone(facet):
                raise InvariantViolation(f"The null facet {face_triple.label()} leaves the null wall.")
            for module in covering:
                if not regular_domain(td, module).contains_cone(facet):
                    raise InvariantViolation(f"{module.label()} does not cover the null facet {face_triple.label()}.")
            labels.append(WallLabel(face=facet, is_null=True, covering=covering))
            continue
        brick = _exchange_label(model, td, cluster, face_triple)
        if not regular_domain(td, brick).contains_cone(facet):
            raise InvariantViolation(f"The domain of {brick.label()} misses the facet {face_triple.label()}.")
        labels.append(WallLabel(face=facet, brick=brick))

    names = [label.label() for label in labels if not label.is_null]
    if len(names) != len(set(names)) or sum(label.is_null for label in labels) > 1:
        raise InvariantViolation(f"The facets of {cluster.label()} repeat a wall label: {names}.")
    return labels


def is_imaginary_cluster(model: HereditaryModel, td: TubeData, cluster: SrrTriple) -> bool:
    """A cluster is imaginary when it has a single projective vector, i.e. its cone has a facet in the null wall."""
    by_count = len(cluster.projective_vectors) == 1
    by_geometry = cone_of(model, td, cluster).intersection(d_reg_eta(model, td)).dim == model.n - 2
    if by_count != by_geometry:
        raise InvariantViolation(f"The two imaginary criteria disagree on {cluster.label()}.")
    return by_count


def verify_chamber_bijection(model: HereditaryModel, td: TubeData, display_progress: bool = False) -> DeepDict:
    """
    Match the cluster cones with the chambers of the regular wall-and-chamber structure.

    Every cluster cone must be a chamber, distinct clusters must give distinct chambers, and every
    chamber must be reached. Each cluster's facets are labelled along the way.
    """
    clusters = enumerate_clusters(model, td, display_progress=display_progress)
    structure = verify_wall_chamber(
        regular_walls(model, td), space=regular_space(td), check_closure=False, display_progress=display_progress
    )

    matching = make_report(cluster_count=len(clusters), chamber_count=len(structure.chambers))
    labelling = make_report(imaginary_count=0)
    seen = {}
    for cluster in tqdm(clusters, desc="Matching clusters with chambers", disable=not display_progress):
        cone = cone_of(model, td, cluster)
        if cone.dim != model.n - 1:
            record_violation(matching, "cone_dim", cluster=cluster.label(), dim=cone.dim)
            continue
        witness = cone.interior_point()
        if any(wall.cone.contains(witness) for wall in structure.walls):
            record_violation(matching, "witness_on_wall", cluster=cluster.label())
            continue
        index = structure.chamber_index(witness)
        if index is None or structure.chambers[index] != cone:
            record_violation(matching, "chamber_equality", cluster=cluster.label())
            continue
        if index in seen:
            record_violation(matching, "distinct_chambers", clusters=[seen[index], cluster.label()])
        seen[index] = cluster.label()

        try:
            labels = wall_labels(model, td, cluster)
            imaginary = is_imaginary_cluster(model, td, cluster)
            labelling["imaginary_count"] += int(imaginary)
            if any(label.is_null for label in labels) != imaginary:
                record_violation(labelling, "null_facet", cluster=cluster.label())
        except InvariantViolation as error:
            record_violation(labelling, "wall_labels", cluster=cluster.label(), message=str(error))
    if len(clusters) != len(structure.chambers):
        record_violation(matching, "count", clusters=len(clusters), chambers=len(structure.chambers))

    return merge_reports(
        [("regular_structure", structure.report), ("matching", matching), ("wall_labels", labelling)],
        quiver=model.quiver.to_text(),
        ranks=list(td.ranks),
    )


def corner_table(model: HereditaryModel, td: TubeData, cluster: SrrTriple) -> List[Tuple[str, List[str]]]:
    """Printable generators of a cluster cone."""
    return [(name, [str(value) for value in vec]) for name, vec in corner_labels(model, td, cluster)]
