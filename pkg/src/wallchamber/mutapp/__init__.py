from .search import acyclic_cycle_orientations, minimal_unoriented_cycle, search_null_data, verify_mutation_invariance
from .transport import (
    PictureState,
    glue_pieces,
    mutate_null_data,
    mutate_picture,
    mutate_sequence,
    pairing_preserved,
    transport_matrices,
    transport_null,
    transport_wall,
)
