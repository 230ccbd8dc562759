from .arrangement import (
    WallChamberStructure,
    covers,
    intersection_closure,
    sphere_wall_count,
    uncovered_pieces,
    verify_fan,
    verify_wall_chamber,
    wall_normal,
)
from .cone import (
    Cone,
    LabeledCone,
    cone_dim,
    cone_hull,
    cone_intersect,
    double_description,
    facet_description,
    is_face,
)
from .linalg import (
    AffineSolution,
    as_matrix,
    as_vec,
    dot,
    inverse,
    mat_vec,
    matmul,
    nullspace,
    primitive,
    project_out,
    rank,
    rref,
    solve_affine,
    transpose,
)
