"""Bipartite substitution graphs and exact rectangular-assignment solvers."""

from .exhaustive import solve_exhaustive
from .rlap import BACKENDS, solve_rlap, solver_backend
from .types import (
    INFEASIBLE,
    BipartiteGraph,
    CostMatrix,
    InfeasiblePair,
    InstanceTooLarge,
    Matching,
    NoFeasibleAssignment,
    ShapeError,
    cost_to_graph,
    graph_to_cost,
    is_feasible,
    matching_weight,
)

__all__ = [
    "INFEASIBLE",
    "BACKENDS",
    "BipartiteGraph",
    "CostMatrix",
    "InfeasiblePair",
    "InstanceTooLarge",
    "Matching",
    "NoFeasibleAssignment",
    "ShapeError",
    "cost_to_graph",
    "graph_to_cost",
    "is_feasible",
    "matching_weight",
    "solve_exhaustive",
    "solve_rlap",
    "solver_backend",
]
