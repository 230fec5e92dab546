"""Overlap labelings of bipartite graphs and the readability parameter."""

from .chain import build_B, build_S, chain_graph, chain_lower_bound, is_forward_matching, label_chain, totient
from .graph_core import BipartiteGraph, PatternKind, enumerate_patterns, is_p4_free, twin_free_reduction
from .grids import GridGraphSpec, grid, grid_graph_readability, grid_readability, toroidal_grid, torus_labeling
from .hub_oracle import (
    BudgetExceeded,
    HubAssignment,
    OracleBudget,
    feasible_matching_bruteforce,
    is_hub_decomposition,
    min_hub_bruteforce,
)
from .labeling import Labeling, VerificationReport, biclique_labeling, verify
from .readability2 import decide_le2, is_feasible_matching

__all__ = [
    "BipartiteGraph", "BudgetExceeded", "GridGraphSpec", "HubAssignment", "Labeling", "OracleBudget",
    "PatternKind", "VerificationReport", "biclique_labeling", "build_B", "build_S", "chain_graph",
    "chain_lower_bound", "decide_le2", "enumerate_patterns", "feasible_matching_bruteforce", "grid",
    "grid_graph_readability", "grid_readability", "is_feasible_matching", "is_forward_matching",
    "is_hub_decomposition", "is_p4_free", "label_chain", "min_hub_bruteforce", "toroidal_grid", "torus_labeling",
    "totient", "twin_free_reduction", "verify",
]
