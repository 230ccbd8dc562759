from .clusters import enumerate_closed_triples, enumerate_clusters, subtriples
from .cones import SrrCone, build_srr_fan, cone_of, corner_labels, expected_cone_dim, transportation_coefficients
from .triples import (
    SrrTriple,
    composition_hypothesis,
    inclusion_checks,
    iota,
    is_cluster,
    is_projectively_closed,
    is_srr,
    pc,
    projective_closure,
    rho,
    tp,
)
from .walls import WallLabel, corner_table, is_imaginary_cluster, verify_chamber_bijection, wall_labels
