"""Constrained paths, trails and cycles, and the structure of unique perfect matchings."""

from .errors import (BudgetExhausted, CertificateError, GraphError, GuardExceeded, InputError,
                     PreconditionViolation)
from .graph import CLOSED_TRAIL, CYCLE, PATH, TRAIL, WALK, Certificate, Digraph, Graph, bridges
from .instances import (ArcColoredDigraph, EdgeColoredGraph, LocallyTwoColoredGraph, MatchedDigraph,
                        TransitionSystem)
from .matching import Matching, augmenting_path_through_edge, find_alternating_cycle, maximum_matching
from .query import Query
from .solvers import solve

__version__ = "0.1.0"

__all__ = [
    "ArcColoredDigraph", "BudgetExhausted", "CLOSED_TRAIL", "CYCLE", "Certificate", "CertificateError",
    "Digraph", "EdgeColoredGraph", "Graph", "GraphError", "GuardExceeded", "InputError",
    "LocallyTwoColoredGraph", "MatchedDigraph", "Matching", "PATH", "PreconditionViolation", "Query",
    "TRAIL", "TransitionSystem", "WALK", "augmenting_path_through_edge", "bridges",
    "find_alternating_cycle", "maximum_matching", "solve",
]
