"""
Chordal Toolkit - clique graphs, reduced clique graphs and clique trees of
chordal graphs, with brute-force oracles to check them against.
"""

from .chordal import CliqueCatalog, EliminationOrder, is_chordal, is_peo, maximal_cliques, mcs_order
from .cliquegraph import (
    CallablePolicy,
    CardinalityPolicy,
    CliqueGraph,
    CliqueGraphEdge,
    CliqueGraphView,
    VertexWeightPolicy,
    WeightingPolicy,
    build_clique_graph,
    is_separating_pair,
    reduced_subgraph,
    validate_weighting,
)
from .cliquetree import (
    CliqueTree,
    clique_sequence,
    clique_tree,
    crg_expansion_path,
    edge_separation_check,
    is_clique_tree,
    max_weight_spanning_tree,
    tree_path_weight_floor,
)
from .errors import ToolkitError
from .graph import Graph, SeparatorReport, VertexSet, delete_vertices, shortest_avoiding_path
from .structure import graphs_isomorphic, induced_cycles, minimal_edges, sb_check, verify_trichotomy

__version__ = "0.1.0"

__all__ = [
    "CallablePolicy",
    "CardinalityPolicy",
    "CliqueCatalog",
    "CliqueGraph",
    "CliqueGraphEdge",
    "CliqueGraphView",
    "CliqueTree",
    "EliminationOrder",
    "Graph",
    "SeparatorReport",
    "ToolkitError",
    "VertexSet",
    "VertexWeightPolicy",
    "WeightingPolicy",
    "build_clique_graph",
    "clique_sequence",
    "clique_tree",
    "crg_expansion_path",
    "delete_vertices",
    "edge_separation_check",
    "graphs_isomorphic",
    "induced_cycles",
    "is_chordal",
    "is_clique_tree",
    "is_peo",
    "is_separating_pair",
    "max_weight_spanning_tree",
    "maximal_cliques",
    "mcs_order",
    "minimal_edges",
    "reduced_subgraph",
    "sb_check",
    "shortest_avoiding_path",
    "tree_path_weight_floor",
    "validate_weighting",
    "verify_trichotomy",
]
