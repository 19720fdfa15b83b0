"""Three-stage editing pipeline: graph construction, assignment, beam edits.

Per-document editing failures are recorded on the result and never abort the
batch; stage wall-clock times are collected for the report.
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field

from ..assignment.rlap import solve_rlap
from ..assignment.types import Matching, graph_to_cost
from ..classifier import LabeledDataset, TextClassifier
from ..gnn.model import GnnModel
from ..gnn.network import decode_assignment, forward
from ..lexicon.embeddings import EmbeddingTable
from ..lexicon.graph_build import GraphBuildConfig, GraphBuildResult, build_graph
from ..lexicon.taxonomy import Taxonomy
from .beam import beam_search_edit
from .lm import BigramScorer
from .types import EditConfig, EditResult, SubstitutionPlan

log = logging.getLogger(__name__)

SOLVERS = ("deterministic", "gnn")


@dataclass
class EditRun:
    results: list[EditResult]
    plan: SubstitutionPlan
    solver: str
    timings: dict[str, float] = field(default_factory=dict)
    graph_shape: tuple[int, int] = (0, 0)


def solve_substitutions(
    graph_result: GraphBuildResult,
    solver: str,
    gnn_model: GnnModel | None = None,
    sap_backend: str | None = None,
) -> Matching:
    """Run the chosen solver over the built graph."""
    cost = graph_to_cost(graph_result.graph)
    if solver == "deterministic":
        return solve_rlap(cost, backend=sap_backend)
    if solver == "gnn":
        if gnn_model is None:
            raise ValueError("gnn solver requires a trained model")
        scores = forward(graph_result.graph, gnn_model)
        return decode_assignment(scores, cost, require_complete=False)
    raise ValueError(f"unknown solver {solver!r}; expected one of {SOLVERS}")


def build_plan(graph_result: GraphBuildResult, matching: Matching) -> SubstitutionPlan:
    subs = graph_result.substitutions(matching)
    occurrences = {w: graph_result.occurrences[w] for w in subs if w in graph_result.occurrences}
    return SubstitutionPlan(subs, occurrences)


def edit_dataset(
    dataset: LabeledDataset,
    graph_config: GraphBuildConfig,
    solver: str,
    edit_config: EditConfig,
    taxonomy: Taxonomy | None = None,
    embeddings: EmbeddingTable | None = None,
    classifier: TextClassifier | None = None,
    gnn_model: GnnModel | None = None,
    scorer: BigramScorer | None = None,
    sap_backend: str | None = None,
) -> EditRun:
    """Edit every document of `dataset`; deterministic given fixed inputs."""
    if classifier is None:
        raise ValueError("edit_dataset requires a trained classifier")
    if not dataset.instances:
        return EditRun([], SubstitutionPlan({}, {}), solver,
                       {"graph": 0.0, "solve": 0.0, "edit": 0.0})

    documents = [(iid, text) for iid, text, _ in dataset.instances]
    if scorer is None:
        scorer = BigramScorer.fit([text for _, text in documents])

    t0 = time.perf_counter()
    graph_result = build_graph(documents, graph_config, taxonomy, embeddings)
    t1 = time.perf_counter()
    matching = solve_substitutions(graph_result, solver, gnn_model, sap_backend)
    t2 = time.perf_counter()
    plan = build_plan(graph_result, matching)

    results: list[EditResult] = []
    for iid, text in documents:
        try:
            results.append(beam_search_edit(iid, text, plan, edit_config, scorer, classifier))
        except Exception as exc:  # per-document failures must not abort the batch
            log.warning("editing document %s failed: %s", iid, exc)
            results.append(
                EditResult(iid, text, text, [], "", 0.0, "", 0.0, flipped=False,
                           heuristic_trace=[], note=f"edit failed: {exc}")
            )
    t3 = time.perf_counter()

    return EditRun(
        results=results,
        plan=plan,
        solver=solver,
        timings={"graph": t1 - t0, "solve": t2 - t1, "edit": t3 - t2},
        graph_shape=(graph_result.graph.n, graph_result.graph.m),
    )
