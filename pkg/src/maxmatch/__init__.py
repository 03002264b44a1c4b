"""Maximum matchings, edge colorings, and graphs whose edge set splits into
maximum matchings."""

from .coloring import ChromaticIndexUndecided, VizingClass, chromatic_index, vizing_coloring
from .extremal import construct_alternative, construct_attaining, construct_c, edge_bound
from .friendly import TheoremViolation, check_class2_structure, decompose, is_friendly
from .graph import Graph, parse_edge_list, parse_graph6, write_edge_list, write_graph6
from .matching import essential_vertices, is_factor_critical, max_matching, nu

__all__ = [
    "ChromaticIndexUndecided",
    "Graph",
    "TheoremViolation",
    "VizingClass",
    "check_class2_structure",
    "chromatic_index",
    "construct_alternative",
    "construct_attaining",
    "construct_c",
    "decompose",
    "edge_bound",
    "essential_vertices",
    "is_factor_critical",
    "is_friendly",
    "max_matching",
    "nu",
    "parse_edge_list",
    "parse_graph6",
    "vizing_coloring",
    "write_edge_list",
    "write_graph6",
]
