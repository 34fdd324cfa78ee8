"""Clique immersions in graphs with independence number 2."""

from .andrasfai import (
    GammaGraph,
    Homomorphism,
    TriColoring,
    blowup_coloring,
    blowup_completion,
    build_gamma,
    find_homomorphism,
    find_induced_c4,
    gamma_coloring,
    gamma_maximal_independent_sets,
    search_gamma_target,
)
from .gauthier import construct_2n5_immersion, edge_minimal_reduction, find_induced_c5
from .graph import Graph, check_set, co_neighbors, complement, induced_subgraph, parse_graph, serialize_graph
from .immersion import (
    Immersion,
    VerificationReport,
    construct_from_clique_coloring,
    hall_matching,
    join_immersions,
    verify_immersion,
)
from .oracles import (
    chromatic_number_alpha2,
    clique_cover_number,
    find_triangle,
    gate_check,
    independence_number,
    is_k_colorable,
    max_clique,
    max_matching,
)
from .vergara import branch_restrict, construct_chi_immersion, critical_reduction, join_decomposition

__all__ = [
    "GammaGraph",
    "Graph",
    "Homomorphism",
    "Immersion",
    "TriColoring",
    "VerificationReport",
    "blowup_coloring",
    "blowup_completion",
    "branch_restrict",
    "build_gamma",
    "check_set",
    "chromatic_number_alpha2",
    "clique_cover_number",
    "co_neighbors",
    "complement",
    "construct_2n5_immersion",
    "construct_chi_immersion",
    "construct_from_clique_coloring",
    "critical_reduction",
    "edge_minimal_reduction",
    "find_homomorphism",
    "find_induced_c4",
    "find_induced_c5",
    "find_triangle",
    "gamma_coloring",
    "gamma_maximal_independent_sets",
    "gate_check",
    "hall_matching",
    "independence_number",
    "induced_subgraph",
    "is_k_colorable",
    "join_decomposition",
    "join_immersions",
    "max_clique",
    "max_matching",
    "parse_graph",
    "search_gamma_target",
    "serialize_graph",
    "verify_immersion",
]
