from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from tqdm import tqdm

from .cone import Cone, LabeledCone, cone_hull, is_face
from .linalg import dot, is_zero, lex_sign, primitive, project_out, vec_scale
from ..exceptions import InvariantViolation
from ..utils.dict import DeepDict
from ..utils.report import make_report, record_violation
from ..utils.types import RatVec


def _oriented(normal: Sequence) -> RatVec:
    normal = primitive(normal)
    return vec_scale(-1, normal) if lex_sign(normal) < 0 else normal


def wall_normal(wall: Cone, space: Cone) -> Optional[RatVec]:
    """Normal (inside span(space)) of the hyperplane spanned by a codimension-one cone of space."""
    if wall.dim != space.dim - 1 or not space.contains_cone(wall):
        return None
    for row in wall.equations:
        normal = project_out(row, space.equations)
        if not is_zero(normal):
            return _oriented(normal)
    return None


def uncovered_pieces(region: Cone, cones: Iterable[Cone]) -> List[Cone]:
    """
    Split region along facet hyperplanes of the given cones and return the pieces no cone covers.

    Only cones meeting region in a full-dimensional piece matter; the region is covered by the union
    of the cones exactly when the returned list is empty.
    """
    relevant = []
    for cone in cones:
        piece = cone.intersection(region)
        if piece.dim == region.dim:
            relevant.append(piece)
    if not relevant:
        return [region]
    if any(piece == region for piece in relevant):
        return []
    for piece in relevant:
        for normal in piece.inequalities:
            if region.crossed_by(normal):
                return uncovered_pieces(region.with_constraints(inequalities=[normal]), relevant) + uncovered_pieces(
                    region.with_constraints(inequalities=[vec_scale(-1, normal)]), relevant
                )
    raise InvariantViolation(f"A full-dimensional piece of {region} is neither equal to it nor cuts it.")


def covers(region: Cone, cones: Iterable[Cone]) -> bool:
    """True iff region is contained in the union of the cones."""
    return not uncovered_pieces(region, list(cones))


def sphere_wall_count(walls: Iterable[LabeledCone]) -> int:
    """Number of walls as drawn on the unit sphere: a one-dimensional linear wall meets it twice."""
    return sum(2 if wall.cone.dim == 1 and wall.cone.is_linear_subspace() else 1 for wall in walls)


def intersection_closure(cones: Iterable[Cone], display_progress: bool = False) -> Set[Cone]:
    cones = list(set(cones))
    closure = set(cones)
    frontier = list(closure)
    with tqdm(desc="Closing walls under intersection", disable=not display_progress) as progress_bar:
        while frontier:
            new_cones = []
            for first in frontier:
                for second in cones:
                    meet = first.intersection(second)
                    if meet not in closure:
                        closure.add(meet)
                        new_cones.append(meet)
            progress_bar.update(len(frontier))
            frontier = new_cones
    return closure


def verify_fan(cones: Iterable[Cone], display_progress: bool = False) -> DeepDict:
    """
    Check the polyhedral fan axioms on a finite set of cones.

    Violations are recorded as report entries with the indices of the witnessing cones.
    """
    cones = sorted(set(cones))
    report = make_report(cone_count=len(cones), rational=True)
    if len({cone.ambient_dim for cone in cones}) > 1:
        record_violation(report, "ambient_dim", dims=sorted({cone.ambient_dim for cone in cones}))
        return report

    members = set(cones)
    for index, cone in enumerate(cones):
        if not cone.is_pointed():
            record_violation(report, "strict_convexity", cone=index)
            continue
        for face in cone.faces():
            if face not in members:
                record_violation(report, "face_closure", cone=index, missing_face=[list(ray) for ray in face.rays])
                break

    pairs = list(combinations(range(len(cones)), 2))
    for first, second in tqdm(pairs, desc="Checking pairwise intersections", disable=not display_progress):
        meet = cones[first].intersection(cones[second])
        if not (is_face(meet, cones[first]) and is_face(meet, cones[second])):
            record_violation(report, "intersection_is_face", cones=[first, second])
    return report


class _CellNode:
    """A node of the splitting tree; leaves are the cells of the arrangement."""

    __slots__ = ("cone", "normal", "negative", "positive")

    def __init__(self, cone: Cone):
        self.cone = cone
        self.normal: Optional[RatVec] = None
        self.negative: Optional["_CellNode"] = None
        self.positive: Optional["_CellNode"] = None

    def locate(self, terms: Sequence[Sequence]) -> "_CellNode":
        """Leaf containing terms[0] + eps terms[1] + eps^2 terms[2] + ... for all small eps > 0."""
        node = self
        while node.normal is not None:
            sign = lex_sign([dot(node.normal, term) for term in terms])
            if sign == 0:
                raise InvariantViolation(f"Perturbed point lies on the splitting hyperplane {node.normal}.")
            node = node.negative if sign < 0 else node.positive
        return node


def _generic_direction(ambient_dim: int) -> RatVec:
    # Moment curve point; its pairing with a small primitive integer vector never vanishes
    step = Fraction(1, 7919)
    return tuple(step**k for k in range(ambient_dim))


@dataclass
class WallChamberStructure:
    ambient_dim: int
    space: Cone
    walls: Tuple[LabeledCone, ...]
    chambers: Tuple[Cone, ...]
    report: DeepDict = field(default_factory=make_report)

    @property
    def verified(self) -> bool:
        return bool(self.report["passed"])

    def chamber_index(self, point: Sequence) -> Optional[int]:
        """Index of the (open) chamber containing point, or None when point lies on a wall."""
        if any(wall.cone.contains(point) for wall in self.walls):
            return None
        for index, chamber in enumerate(self.chambers):
            if chamber.contains_in_relative_interior(point):
                return index
        return None


def _split_cells(space: Cone, walls: Sequence[Tuple[Cone, RatVec]], display_progress: bool):
    root = _CellNode(space)
    leaves = [root]
    for wall, normal in tqdm(walls, desc="Splitting cells along walls", disable=not display_progress):
        new_leaves = []
        for leaf in leaves:
            if leaf.cone.crossed_by(normal) and leaf.cone.intersection(wall).dim == wall.dim:
                leaf.normal = normal
                leaf.negative = _CellNode(leaf.cone.with_constraints(inequalities=[normal]))
                leaf.positive = _CellNode(leaf.cone.with_constraints(inequalities=[vec_scale(-1, normal)]))
                new_leaves.extend((leaf.negative, leaf.positive))
            else:
                new_leaves.append(leaf)
        leaves = new_leaves
    return root, leaves


def verify_wall_chamber(
    walls: Iterable[LabeledCone],
    space: Optional[Cone] = None,
    ambient_dim: Optional[int] = None,
    check_closure: bool = True,
    display_progress: bool = False,
) -> WallChamberStructure:
    """
    Enumerate the chambers cut out by a finite wall set and check the wall-and-chamber axioms.

    Cells are obtained by splitting the space along the hyperplane of every wall that passes through a
    cell's interior. Adjacent cells are merged into one chamber whenever their common facet is not
    entirely covered by walls. Each merged chamber is convex exactly when its convex hull is covered
    by its cells and meets no wall in its interior.

    Parameters
    ----------
    walls: iterable of LabeledCone
    space: Cone, optional
        The linear subspace carrying the structure; defaults to the whole ambient space.
    ambient_dim: int, optional
        Needed only when both walls and space are empty.
    check_closure: bool, default: True
        Also compute the closure of the wall set under intersection (reported as closure_size).
    display_progress: bool, default: False
    """
    walls = tuple(sorted(walls, key=LabeledCone.sort_key))
    if space is None:
        if ambient_dim is None:
            if not walls:
                raise ValueError("Pass ambient_dim to verify an empty wall set!")
            ambient_dim = walls[0].cone.ambient_dim
        space = Cone.linear_subspace(ambient_dim, ())
    ambient_dim = space.ambient_dim
    report = make_report(wall_count=len(walls), sphere_wall_count=sphere_wall_count(walls))

    normals: List[Tuple[Cone, RatVec]] = []
    for index, wall in enumerate(walls):
        normal = wall_normal(wall.cone, space)
        if normal is None:
            record_violation(report, "wall_containment", wall=index, dim=wall.cone.dim, expected_dim=space.dim - 1)
            continue
        normals.append((wall.cone, normal))

    report["closure_size"] = (
        len(intersection_closure((wall.cone for wall in walls), display_progress=display_progress))
        if check_closure
        else None
    )

    root, leaves = _split_cells(space, normals, display_progress)
    report["cell_count"] = len(leaves)

    walls_by_normal: Dict[RatVec, List[Cone]] = {}
    for cone, normal in normals:
        walls_by_normal.setdefault(normal, []).append(cone)

    parent = list(range(len(leaves)))

    def find(index: int) -> int:
        while parent[index] != index:
            parent[index] = parent[parent[index]]
            index = parent[index]
        return index

    leaf_index = {id(leaf): index for index, leaf in enumerate(leaves)}
    generic = _generic_direction(ambient_dim)
    for index, leaf in enumerate(tqdm(leaves, desc="Merging cells into chambers", disable=not display_progress)):
        for normal, facet in leaf.cone.facets():
            for piece in uncovered_pieces(facet, walls_by_normal.get(_oriented(normal), [])):
                neighbour = root.locate([piece.interior_point(), normal, generic])
                if neighbour is leaf:
                    raise InvariantViolation("A cell was found on both sides of its own facet.")
                parent[find(index)] = find(leaf_index[id(neighbour)])

    groups: Dict[int, List[Cone]] = {}
    for index, leaf in enumerate(leaves):
        groups.setdefault(find(index), []).append(leaf.cone)

    chambers = []
    for cells in groups.values():
        hull = cone_hull([generator for cell in cells for generator in cell.generators], ambient_dim=ambient_dim)
        chambers.append(hull)
        crossing_walls = [
            cone for cone, normal in normals if hull.crossed_by(normal) and hull.intersection(cone).dim == cone.dim
        ]
        if crossing_walls or not covers(hull, cells):
            record_violation(report, "chamber_convexity", chamber_rays=[list(ray) for ray in hull.rays])
    chambers.sort()
    report["chamber_count"] = len(chambers)
    return WallChamberStructure(
        ambient_dim=ambient_dim, space=space, walls=walls, chambers=tuple(chambers), report=report
    )
