"""
🎨 CFC LAB
Conflict-free connection colorings: exact solver, checker, constructive colorers,
graph families and a verification harness.
"""

from .alpha import AlphaResult, independence_number, independence_number_exhaustive
from .canonical import canonical_form
from .coloring import (
    Certificate,
    EdgeColoring,
    PairWitness,
    Witness,
    exists_conflict_free_path,
    exists_conflict_free_path_oracle,
    is_conflict_free_connected,
    is_conflict_free_path,
    verify_certificate,
)
from .config import DEFAULT_CONFIG, LabConfig
from .construct import (
    ConstructionTrace,
    TraceNode,
    color_H,
    color_path_ruler,
    color_Q,
    color_star,
    color_tree_via_theorem2,
    color_via_theorem1,
)
from .errors import CfcLabError
from .families import Family, FamilySpec, enumerate_connected_graphs, enumerate_trees, gen
from .graph import Graph, Subgraph, cut_edges, from_edge_list
from .solver import (
    CfcResult,
    SearchStats,
    cfc_exact,
    cfc_lower_bound,
    elementary_lower_bound,
    find_coloring,
    h_value,
    iter_optimal_colorings,
    lemma7_upper_bound,
    satisfies_lemma5,
)

__version__ = "1.0.0"

__all__ = [
    "__version__",
    "AlphaResult",
    "independence_number",
    "independence_number_exhaustive",
    "canonical_form",
    "Certificate",
    "EdgeColoring",
    "PairWitness",
    "Witness",
    "exists_conflict_free_path",
    "exists_conflict_free_path_oracle",
    "is_conflict_free_connected",
    "is_conflict_free_path",
    "verify_certificate",
    "DEFAULT_CONFIG",
    "LabConfig",
    "ConstructionTrace",
    "TraceNode",
    "color_H",
    "color_path_ruler",
    "color_Q",
    "color_star",
    "color_tree_via_theorem2",
    "color_via_theorem1",
    "CfcLabError",
    "Family",
    "FamilySpec",
    "enumerate_connected_graphs",
    "enumerate_trees",
    "gen",
    "Graph",
    "Subgraph",
    "cut_edges",
    "from_edge_list",
    "CfcResult",
    "SearchStats",
    "cfc_exact",
    "cfc_lower_bound",
    "elementary_lower_bound",
    "find_coloring",
    "h_value",
    "iter_optimal_colorings",
    "lemma7_upper_bound",
    "satisfies_lemma5",
]
