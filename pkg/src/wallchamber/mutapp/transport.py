"""Transport of regular pictures, null roots and their g-vectors along quiver mutation."""
import warnings
from dataclasses import dataclass, field, replace
from typing import List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from ..exactgeom.arrangement import WallChamberStructure, covers, verify_wall_chamber
from ..exactgeom.cone import Cone, LabeledCone, cone_hull
from ..exactgeom.linalg import as_matrix, as_vec, dot, identity, mat_vec, matmul, transpose, unit_vector
from ..exceptions import InvariantViolation
from ..quivercore.model import HereditaryModel
from ..quivercore.mutation import a_matrices, check_exchange_matrix, fz_mutate
from ..quivercore.quiver import Quiver
from ..tame.domains import regular_walls
from ..tame.tubes import TubeData
from ..utils.types import RatMatrix, RatVec


@dataclass(frozen=True, eq=False)
class PictureState:
    """
    A regular picture together with the exchange matrix and null data it belongs to.

    Walls live in g(eta)^perp; history records each mutation vertex with the transport matrix used
    ("+", "-", or "+-" when the walls were split along the hyperplane of S(k)).
    """

    exchange_matrix: np.ndarray
    eta: RatVec
    g_eta: RatVec
    walls: Tuple[LabeledCone, ...] = ()
    history: Tuple[Tuple[int, str], ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "exchange_matrix", check_exchange_matrix(self.exchange_matrix))
        object.__setattr__(self, "eta", as_vec(self.eta))
        object.__setattr__(self, "g_eta", as_vec(self.g_eta))
        object.__setattr__(self, "walls", tuple(sorted(self.walls, key=LabeledCone.sort_key)))
        if dot(self.eta, self.g_eta) != 0:
            raise InvariantViolation(f"g(eta) = {self.g_eta} does not annihilate eta = {self.eta}.")
        for wall in self.walls:
            if any(dot(self.g_eta, generator) != 0 for generator in wall.cone.generators):
                raise InvariantViolation(f"Wall {wall.module_id} leaves g(eta)^perp.")
            if dot(self.g_eta, wall.label) != 0:
                raise InvariantViolation(f"Wall label {wall.label} is not regular for g(eta) = {self.g_eta}.")

    @classmethod
    def from_regular(cls, model: HereditaryModel, td: TubeData) -> "PictureState":
        return cls(
            exchange_matrix=model.quiver.exchange_matrix(),
            eta=model.eta,
            g_eta=model.g_eta,
            walls=tuple(regular_walls(model, td)),
        )

    @property
    def n(self) -> int:
        return self.exchange_matrix.shape[0]

    @property
    def quiver(self) -> Quiver:
        return Quiver.from_exchange_matrix(self.exchange_matrix)

    def space(self) -> Cone:
        return Cone.linear_subspace(self.n, [self.g_eta])

    def in_null_wall(self, wall: LabeledCone) -> bool:
        """Walls labelled by eta lie inside the null wall D(eta), whether or not they are flagged."""
        return wall.is_null or wall.label == self.eta

    def labels(self, include_null: bool = False) -> List[RatVec]:
        """One label per wall, so bricks sharing a dimension vector are counted separately."""
        return sorted(wall.label for wall in self.walls if include_null or not self.in_null_wall(wall))

    def null_labels(self) -> List[RatVec]:
        return sorted({wall.label for wall in self.walls if wall.is_null})

    def verify(self, display_progress: bool = False) -> WallChamberStructure:
        return verify_wall_chamber(
            self.walls, space=self.space(), check_closure=False, display_progress=display_progress
        )


def _rational(matrix: np.ndarray) -> RatMatrix:
    return as_matrix(matrix.tolist())


def transport_matrices(state: PictureState, k: int) -> Tuple[RatMatrix, RatMatrix]:
    a_plus, a_minus = a_matrices(state.exchange_matrix, k)
    return _rational(a_plus), _rational(a_minus)


def transport_null(state: PictureState, k: int) -> Tuple[RatVec, RatVec]:
    """
    Null root and its g-vector after mutating at k.

    A_k^+ is used when g(eta).e_k >= 0 and A_k^- when it is <= 0; when the pairing vanishes both are
    computed and must agree.
    """
    a_plus, a_minus = transport_matrices(state, k)
    pairing = state.g_eta[k - 1]
    candidates = []
    if pairing >= 0:
        candidates.append(a_plus)
    if pairing <= 0:
        candidates.append(a_minus)
    results = {(mat_vec(matrix, state.eta), mat_vec(transpose(matrix), state.g_eta)) for matrix in candidates}
    if len(results) != 1:
        raise InvariantViolation(f"A_{k}^+ and A_{k}^- disagree on the null data of '{state.quiver}'.")
    eta, g_eta = results.pop()
    if any(value < 0 for value in eta):
        raise InvariantViolation(f"The transported null root {[str(value) for value in eta]} has a negative entry.")
    return eta, g_eta


def _projection(g_eta: RatVec) -> RatMatrix:
    """Orthogonal projection onto g(eta)^perp."""
    norm = dot(g_eta, g_eta)
    return tuple(
        tuple(unit - g_i * g_j / norm for unit, g_j in zip(row, g_eta)) for row, g_i in zip(identity(len(g_eta)), g_eta)
    )


def _side(cone: Cone, k: int) -> Optional[str]:
    """'+' or '-' for a cone on one closed side of v.e_k = 0, '0' inside it, None when crossed."""
    values = [generator[k - 1] for generator in cone.generators]
    if any(value > 0 for value in values) and any(value < 0 for value in values):
        return None
    if any(value > 0 for value in values):
        return "+"
    if any(value < 0 for value in values):
        return "-"
    return "0"


def _move(
    wall: LabeledCone, piece: Cone, matrix: RatMatrix, projection: RatMatrix, label: RatVec, eta: RatVec
) -> LabeledCone:
    if any(value < 0 for value in label):
        raise InvariantViolation(
            f"Transporting {wall.module_id} gives the label {[str(value) for value in label]} with a negative entry."
        )
    image = piece.linear_image(matmul(projection, transpose(matrix)))
    if image.dim != piece.dim:
        raise InvariantViolation(f"Transporting {wall.module_id} collapsed a wall of dimension {piece.dim}.")
    return LabeledCone(cone=image, label=eta if wall.is_null else label, module_id=wall.module_id, is_null=wall.is_null)


def _sided_pieces(state: PictureState, wall: LabeledCone, k: int) -> List[Tuple[str, LabeledCone]]:
    a_plus, a_minus = transport_matrices(state, k)
    eta, g_eta = transport_null(state, k)
    projection = _projection(g_eta)
    pairing = state.g_eta[k - 1]
    e_k = unit_vector(state.n, k - 1)

    if pairing > 0:
        return [("+", _move(wall, wall.cone, a_plus, projection, mat_vec(a_plus, wall.label), eta))]
    if pairing < 0:
        return [("-", _move(wall, wall.cone, a_minus, projection, mat_vec(a_minus, wall.label), eta))]

    if wall.label == e_k:
        return [("k", _move(wall, wall.cone, a_plus, projection, e_k, eta))]
    side = _side(wall.cone, k)
    if side == "+":
        return [("+", _move(wall, wall.cone, a_plus, projection, mat_vec(a_plus, wall.label), eta))]
    if side == "-":
        return [("-", _move(wall, wall.cone, a_minus, projection, mat_vec(a_minus, wall.label), eta))]
    if side == "0":
        for matrix in (a_plus, a_minus):
            label = mat_vec(matrix, wall.label)
            if all(value >= 0 for value in label):
                return [("0", _move(wall, wall.cone, matrix, projection, label, eta))]
        raise InvariantViolation(f"No transport matrix keeps the label of {wall.module_id} nonnegative.")

    pieces = []
    for sign, matrix, inequality in (("+", a_plus, tuple(-value for value in e_k)), ("-", a_minus, e_k)):
        piece = wall.cone.with_constraints(inequalities=[inequality])
        if piece.dim < wall.cone.dim:
            warnings.warn(f"Dropping a lower-dimensional piece of {wall.module_id} cut at vertex {k}.")
            continue
        moved = _move(wall, piece, matrix, projection, mat_vec(matrix, wall.label), eta)
        if wall.module_id is not None:
            moved = replace(moved, module_id=f"{wall.module_id}/{k}{sign}")
        pieces.append((sign, moved))
    return pieces


def transport_wall(state: PictureState, wall: LabeledCone, k: int) -> List[LabeledCone]:
    """
    The pieces of a wall after mutating at k, projected into the new g(eta)^perp.

    With g(eta).e_k > 0 (resp. < 0) the whole wall moves by v -> (A_k^+)^T v (resp. A_k^-) and its
    label by d -> A_k^+ d. With g(eta).e_k = 0 the wall is cut along v.e_k = 0: the nonnegative part
    moves by A_k^+, the nonpositive part by A_k^-. The wall of S(k) keeps the label e_k.
    """
    return [piece for _, piece in _sided_pieces(state, wall, k)]


def _glues(first: Tuple[int, str, LabeledCone], second: Tuple[int, str, LabeledCone]) -> bool:
    (source, side, wall), (other_source, other_side, other) = first, second
    if source == other_source or {side, other_side} != {"+", "-"}:
        return False
    if wall.label != other.label or wall.is_null != other.is_null or wall.cone.dim != other.cone.dim:
        return False
    hull = cone_hull(wall.cone.generators + other.cone.generators, wall.cone.ambient_dim)
    return hull.dim == wall.cone.dim and covers(hull, [wall.cone, other.cone])


def glue_pieces(pieces: Sequence[Tuple[int, str, LabeledCone]]) -> List[LabeledCone]:
    """
    Merge transported pieces that make up a single wall of the mutated picture.

    Each piece carries the index of the wall it came from and the side of v.e_k = 0 it was moved from.
    Pieces on one side move by the same linear map and stay distinct walls, as do the two halves of a cut
    wall. Two pieces from different walls on opposite sides glue when they share a label and their union
    is convex.
    """
    graph = nx.Graph()
    graph.add_nodes_from(range(len(pieces)))
    for i, first in enumerate(pieces):
        for j in range(i + 1, len(pieces)):
            if _glues(first, pieces[j]):
                graph.add_edge(i, j)

    walls = []
    for component in nx.connected_components(graph):
        members = [pieces[index][2] for index in sorted(component)]
        if len(members) == 1:
            walls.append(members[0])
            continue
        cones = [member.cone for member in members]
        hull = cone_hull([generator for cone in cones for generator in cone.generators], cones[0].ambient_dim)
        if not covers(hull, cones):
            raise InvariantViolation(f"Pieces {[member.module_id for member in members]} do not glue to a convex wall.")
        module_ids = sorted(member.module_id for member in members if member.module_id is not None)
        walls.append(
            LabeledCone(
                cone=hull, label=members[0].label, module_id="|".join(module_ids) or None, is_null=members[0].is_null
            )
        )
    return walls


def mutate_picture(
    state: PictureState, k: int, verify: bool = True, display_progress: bool = False
) -> PictureState:
    """
    The regular picture of the mutated quiver with potential, transported from state.

    Raises InvariantViolation when a label turns negative or, with verify=True, when the transported
    walls fail the wall-and-chamber axioms.
    """
    if not 1 <= k <= state.n:
        raise ValueError(f"Mutation vertex k={k} is out of range 1..{state.n}!")
    eta, g_eta = transport_null(state, k)
    pairing = state.g_eta[k - 1]
    pieces = [
        (source, side, piece)
        for source, wall in enumerate(state.walls)
        for side, piece in _sided_pieces(state, wall, k)
    ]
    walls = glue_pieces(pieces)
    mutated = PictureState(
        exchange_matrix=fz_mutate(state.exchange_matrix, k),
        eta=eta,
        g_eta=g_eta,
        walls=tuple(walls),
        history=state.history + ((k, "+" if pairing > 0 else "-" if pairing < 0 else "+-"),),
    )
    if verify:
        structure = mutated.verify(display_progress=display_progress)
        if not structure.verified:
            raise InvariantViolation(
                f"The picture transported to '{mutated.quiver}' fails the wall-and-chamber axioms: "
                f"{structure.report['violations']}"
            )
    return mutated


def mutate_sequence(
    state: PictureState, sequence: Sequence[int], verify: bool = True, display_progress: bool = False
) -> PictureState:
    for k in sequence:
        state = mutate_picture(state, k, verify=verify, display_progress=display_progress)
    return state


def mutate_null_data(state: PictureState, k: int) -> PictureState:
    """Mutate the exchange matrix and null data only; the walls are dropped."""
    eta, g_eta = transport_null(state, k)
    return replace(
        state,
        exchange_matrix=fz_mutate(state.exchange_matrix, k),
        eta=eta,
        g_eta=g_eta,
        walls=(),
        history=state.history + ((k, "null"),),
    )


def pairing_preserved(matrix: RatMatrix, point: Sequence, label: Sequence) -> bool:
    """(A^T v).(A d) = v.d, which holds since A squares to the identity."""
    return dot(mat_vec(transpose(matrix), point), mat_vec(matrix, label)) == dot(point, label)

