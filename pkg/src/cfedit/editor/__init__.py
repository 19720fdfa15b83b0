"""Beam-search counterfactual editing over solver-produced word pairs."""

from .beam import beam_search_edit, heuristic_score, score_candidates, substitution_limit
from .lm import BigramScorer, DegenerateLoss
from .pipeline import SOLVERS, EditRun, build_plan, edit_dataset, solve_substitutions
from .types import EditConfig, EditResult, Heuristic, ScorerUnavailable, SubstitutionPlan

__all__ = [
    "SOLVERS",
    "BigramScorer",
    "DegenerateLoss",
    "EditConfig",
    "EditResult",
    "EditRun",
    "Heuristic",
    "ScorerUnavailable",
    "SubstitutionPlan",
    "beam_search_edit",
    "build_plan",
    "edit_dataset",
    "heuristic_score",
    "score_candidates",
    "solve_substitutions",
    "substitution_limit",
]
