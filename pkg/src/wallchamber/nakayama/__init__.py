from .domains import bricks_containing, domain, left_subsum_start, semistable_bricks
from .modules import (
    NakModule,
    NullSign,
    SttObject,
    ar_quiver,
    bricks,
    dim_vector,
    g_vector,
    indecomposables,
    is_tau_rigid_indecomposable,
    projective,
    simple,
    tau,
)
from .representation import fac_contains, fac_included, hom_dim, representation, trace_submodule_length
from .tilting import (
    complete_to_stt,
    enumerate_stt,
    exchange_brick,
    exchange_partner,
    g_cone,
    is_support_tau_rigid,
    is_support_tau_tilting,
    null_sign,
    stt_exchange_graph,
    summands_compatible,
    tau_rigid_candidates,
)
