# constructions

from .construction import Construction
from .antipodal import antipodal_decomposition, single_edge_decomposition, subdivide
from .lift import BlockLift, lift_by_blocks, class_representatives, block_masks
from .product import ProductSplit, product_split
from .hamiltonian import hamiltonian_decomposition, construct_hamiltonian_cycles, torus_cycles
from .matchings import MatchingKind, TaggedMatching, MatchingSequence, ConnectorPaths
from .matchings import dimension, internal, concat_matchings, pair_cycles_with_matching
from .matchings import join_with_connectors, cycles_to_paths
from .power import PowCaseParams, PowerOfTwo, plan_power_of_two, power_of_two_decomposition
from .power import special_q5_k4, small_cube_paths, q3_complement_matching
from .main import decompose, even_n_decomposition, even_block_size, even_path_length
from .walks import eulerian_walk_decomposition, hypercube_graph

__all__ = [
    "Construction",
    "antipodal_decomposition",
    "single_edge_decomposition",
    "subdivide",
    "BlockLift",
    "lift_by_blocks",
    "class_representatives",
    "block_masks",
    "ProductSplit",
    "product_split",
    "hamiltonian_decomposition",
    "construct_hamiltonian_cycles",
    "torus_cycles",
    "MatchingKind",
    "TaggedMatching",
    "MatchingSequence",
    "ConnectorPaths",
    "dimension",
    "internal",
    "concat_matchings",
    "pair_cycles_with_matching",
    "join_with_connectors",
    "cycles_to_paths",
    "PowCaseParams",
    "PowerOfTwo",
    "plan_power_of_two",
    "power_of_two_decomposition",
    "special_q5_k4",
    "small_cube_paths",
    "q3_complement_matching",
    "decompose",
    "even_n_decomposition",
    "even_block_size",
    "even_path_length",
    "eulerian_walk_decomposition",
    "hypercube_graph",
]

classes = __all__
