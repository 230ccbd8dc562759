from .domains import (
    d_reg_eta,
    regular_domain,
    regular_semistable_bricks,
    regular_space,
    regular_walls,
    tube_bricks,
    tube_module_dim,
    vperp_membership,
)
from .infinitesimal import infinitesimal_membership, vperp_domain_membership
from .projective import (
    ProjectiveVector,
    all_choices,
    check_choice,
    g0,
    long_hom_module,
    nakayama_counterpart,
    projective_vector,
)
from .tubes import (
    Tube,
    TubeData,
    TubeModule,
    check_tube_module,
    is_a_tilde,
    load_tube_table,
    parse_tube_table,
    tube_data,
    validate_tube_data,
)
