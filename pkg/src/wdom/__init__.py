"""Exact w-domination and secure w-domination numbers of small graphs,
with a closed-form catalog for lexicographic products and a harness that
checks one against the other."""

from .domination import Labeling, WeightVector, is_secure_w_dominating, is_w_dominating
from .graph import Graph, cycle, lexicographic_product, parse_graph_expr, path
from .solver import DominationResult, SolverConfig, Status, solve

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "path",
    "cycle",
    "lexicographic_product",
    "parse_graph_expr",
    "WeightVector",
    "Labeling",
    "is_w_dominating",
    "is_secure_w_dominating",
    "SolverConfig",
    "Status",
    "DominationResult",
    "solve",
]
