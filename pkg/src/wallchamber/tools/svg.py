"""SVG rendering of pictures whose sphere has dimension one (a circle) or two (stereographic projection)."""
from fractions import Fraction
from html import escape
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .document import PictureDocument, cone_from_entry
from ..exactgeom.cone import Cone
from ..exactgeom.linalg import vec_scale, vec_sum

# Pole candidates as coefficient vectors on the rational basis of the picture's space
_POLE_CANDIDATES = (
    (1, 2, 3),
    (3, -1, 2),
    (2, 3, -5),
    (-1, 4, 7),
    (5, 2, 1),
    (1, -3, 4),
    (7, 5, -2),
    (-4, 1, 9),
)


def _orthonormal_basis(space: Cone) -> np.ndarray:
    basis = np.array([[float(value) for value in line] for line in space.lineality]).T
    q, _ = np.linalg.qr(basis)
    return q


def _unit(vector: np.ndarray) -> np.ndarray:
    return vector / np.linalg.norm(vector)


def _great_arc(start: np.ndarray, end: np.ndarray, samples: int) -> List[np.ndarray]:
    return [_unit((1 - t) * start + t * end) for t in np.linspace(0.0, 1.0, samples)]


def _arcs(cone: Cone, frame: np.ndarray, samples: int) -> List[List[np.ndarray]]:
    """Sampled polylines on the unit sphere covering the cone, in frame coordinates."""
    as_float = lambda vector: _unit(frame.T @ np.array([float(value) for value in vector]))  # noqa: E731
    rays = [as_float(ray) for ray in cone.rays]
    lines = [as_float(line) for line in cone.lineality]
    if not lines:
        if len(rays) == 1:
            return [[rays[0]]]
        return [_great_arc(rays[0], rays[1], samples)]
    if len(lines) == 1 and not rays:
        return [[lines[0]], [-lines[0]]]
    if len(lines) == 1:
        return [_great_arc(lines[0], rays[0], samples) + _great_arc(rays[0], -lines[0], samples)[1:]]
    first, second = lines[0], _unit(lines[1] - (lines[1] @ lines[0]) * lines[0])
    return [[first * np.cos(angle) + second * np.sin(angle) for angle in np.linspace(0.0, 2 * np.pi, 2 * samples)]]


def choose_pole(document: PictureDocument, seed: int = 0) -> Tuple[Fraction, ...]:
    """The first candidate pole, in a seed-dependent order, that lies on no wall."""
    space = document.space()
    walls = document.wall_cones()
    order = np.random.default_rng(seed).permutation(len(_POLE_CANDIDATES))
    for index in order:
        coefficients = _POLE_CANDIDATES[index][: len(space.lineality)]
        pole = vec_sum((vec_scale(c, line) for c, line in zip(coefficients, space.lineality)), space.ambient_dim)
        if not any(wall.cone.contains(pole) for wall in walls):
            return pole
    raise ValueError("Every candidate pole lies on a wall of the picture!")


def _stereographic_frame(space: Cone, pole: Sequence[Fraction]) -> np.ndarray:
    basis = _orthonormal_basis(space)
    axis = _unit(basis.T @ np.array([float(value) for value in pole]))
    completed, _ = np.linalg.qr(np.column_stack([axis, np.eye(3)]))
    return basis @ np.column_stack([completed[:, 1], completed[:, 2], axis])


def _project(point: np.ndarray, is_circle: bool) -> Optional[np.ndarray]:
    if is_circle:
        return point[:2]
    denominator = 1.0 - point[2]
    if denominator < 1e-9:
        return None
    return point[:2] / denominator


def _path(points: List[np.ndarray], scale: float, center: float) -> str:
    coordinates = [f"{center + scale * x:.4f},{center - scale * y:.4f}" for x, y in points]
    return "M " + " L ".join(coordinates)


def render_svg(document: PictureDocument, seed: int = 0, size: int = 480, samples: int = 48) -> str:
    """
    Draw the walls of a picture.

    A space of dimension two is drawn on the unit circle; a space of dimension three is projected
    stereographically from a pole off all walls. Chamber labels are placed at interior points.
    """
    space = document.space()
    if space.dim not in (2, 3):
        raise ValueError(f"Only pictures on a circle or a 2-sphere can be drawn; the space has dimension {space.dim}!")
    is_circle = space.dim == 2
    frame = _orthonormal_basis(space) if is_circle else _stereographic_frame(space, choose_pole(document, seed))

    wall_paths = []
    for wall in document.walls:
        cone = cone_from_entry(wall, document.ambient_dim)
        name = wall["module_id"] or ",".join(str(value) for value in wall["label"])
        for arc in _arcs(cone, frame, samples):
            projected = [point for point in (_project(p, is_circle) for p in arc) if point is not None]
            if projected:
                wall_paths.append((name, wall["is_null"], projected))

    chamber_marks = []
    for chamber in document.chambers:
        if chamber["cluster"] is None:
            continue
        cone = cone_from_entry(chamber, document.ambient_dim)
        interior = frame.T @ np.array([float(value) for value in cone.interior_point()])
        point = _project(_unit(interior), is_circle) if np.linalg.norm(interior) > 0 else None
        if point is not None:
            chamber_marks.append((chamber["cluster"], point))

    radius = max([1.0] + [float(np.linalg.norm(p)) for _, _, points in wall_paths for p in points])
    radius = min(radius, 4.0)
    center = size / 2
    scale = 0.45 * size / radius

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f'<rect width="{size}" height="{size}" fill="white"/>',
    ]
    if is_circle:
        lines.append(f'<circle cx="{center:.4f}" cy="{center:.4f}" r="{scale:.4f}" fill="none" stroke="#999999"/>')
    for name, is_null, points in wall_paths:
        style = 'stroke="#cc3333" stroke-dasharray="4 3"' if is_null else 'stroke="black"'
        if len(points) == 1:
            x, y = center + scale * points[0][0], center - scale * points[0][1]
            lines.append(f'<circle cx="{x:.4f}" cy="{y:.4f}" r="3" fill="{"#cc3333" if is_null else "black"}"/>')
            lines.append(f'<text x="{x + 5:.4f}" y="{y - 5:.4f}" font-size="10">{escape(name)}</text>')
        else:
            path = _path(points, scale, center)
            lines.append(f'<path d="{path}" fill="none" {style}><title>{escape(name)}</title></path>')
    for name, point in chamber_marks:
        x, y = center + scale * point[0], center - scale * point[1]
        lines.append(f'<text x="{x:.4f}" y="{y:.4f}" font-size="8" fill="#336699">{escape(name)}</text>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
