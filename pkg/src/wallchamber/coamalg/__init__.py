from .product import (
    CoamalgProduct,
    Factor,
    Functional,
    coamalg,
    coamalg_associativity_check,
    coamalg_commute_check,
    delta_equations,
)
from .regular import nakayama_factor, psi_iso, regular_coordinates, regular_product, verify_thm_b
