# cube

from .vertices import Side, Edge
from .vertices import check_dim, vertex_parity, parity_array, antipode, popcount
from .vertices import is_adjacent, flipped_coordinate, flipped_coordinates
from .vertices import full_mask, coordinate_bit, all_vertices, vertices_of_side, num_edges
from .vertices import vertex_key, vertex_keys, format_vertex, parse_vertex
from .vertices import edge_slots, step_slots, gray_code_cycle

from .objects import Matching, CycleCover, Decomposition
from .objects import dimension_matching, embed, relabel

from .errors import InfeasibleError, ConstructionError

__all__ = [
    "Side",
    "Edge",
    "check_dim",
    "vertex_parity",
    "parity_array",
    "antipode",
    "popcount",
    "is_adjacent",
    "flipped_coordinate",
    "flipped_coordinates",
    "full_mask",
    "coordinate_bit",
    "all_vertices",
    "vertices_of_side",
    "num_edges",
    "vertex_key",
    "vertex_keys",
    "format_vertex",
    "parse_vertex",
    "edge_slots",
    "step_slots",
    "gray_code_cycle",
    "Matching",
    "CycleCover",
    "Decomposition",
    "dimension_matching",
    "embed",
    "relabel",
    "InfeasibleError",
    "ConstructionError",
]

classes = __all__
