"""Exact 4-path vertex cover solver.

Decides whether k vertex deletions can destroy every simple path on four
vertices, via iterative compression around a 24-rule branch-and-reduce
procedure for the disjoint subproblem, with brute-force oracles and
reproducible instance generators for verification.
"""

from .errors import (
    GenerationError,
    GraphFormatError,
    InvalidInstanceError,
    InvariantViolation,
    NodeBudgetExceeded,
)
from .graph import Graph
from .instance import ConnectionProfile, Instance
from .oracle import OracleAnswer, brute_min_disjoint, brute_min_pvc4, enumerate_labeled_graphs
from .rules import Branch, Reduce, RuleMatch, Terminal, select_rule
from .solver import (
    DEFAULT_NODE_CAP,
    CoverResult,
    SolveStats,
    iterative_compression,
    minimize,
    solve_disjoint,
    verify_cover,
)

__version__ = "0.1.0"

__all__ = [
    "Branch",
    "ConnectionProfile",
    "CoverResult",
    "DEFAULT_NODE_CAP",
    "GenerationError",
    "Graph",
    "GraphFormatError",
    "Instance",
    "InvalidInstanceError",
    "InvariantViolation",
    "NodeBudgetExceeded",
    "OracleAnswer",
    "Reduce",
    "RuleMatch",
    "SolveStats",
    "Terminal",
    "brute_min_disjoint",
    "brute_min_pvc4",
    "enumerate_labeled_graphs",
    "iterative_compression",
    "minimize",
    "select_rule",
    "solve_disjoint",
    "verify_cover",
]
