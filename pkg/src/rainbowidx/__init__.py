"""Exact k-rainbow index tools: constructions, verification and extremal search."""

from .coloring import EdgeColoring
from .constructions import ColoredConstruction, ConstructionSpec, Family
from .graph import Graph, GraphError, make_graph
from .search import SearchResult, t_min
from .verify import RxResult, VerificationReport, rx_at_most, rx_exact, verify_k_rainbow

__all__ = [
    "ColoredConstruction",
    "ConstructionSpec",
    "EdgeColoring",
    "Family",
    "Graph",
    "GraphError",
    "RxResult",
    "SearchResult",
    "VerificationReport",
    "make_graph",
    "rx_at_most",
    "rx_exact",
    "t_min",
    "verify_k_rainbow",
]
