"""Evaluation metrics for counterfactual edits.

Four per-run measures: flip-rate (fraction of changed predictions),
minimality (word-level Levenshtein distance over original length), closeness
(greedy embedding-alignment F1 between original and edited tokens), and
fluency (|1 - loss ratio| under a language-model scorer).  All functions are
pure; `aggregate` averages them over a result list and carries the
per-stage runtimes through to the report.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass

import numpy as np

from .editor.lm import BigramScorer, DegenerateLoss
from .editor.types import EditResult
from .lexicon.embeddings import EmbeddingTable
from .lexicon.tokenize import token_strings

CSV_HEADER = "config,fluency,closeness,flip_rate,minimality,runtime_graph_s,runtime_solve_s,runtime_edit_s"


class EmptyInput(ValueError):
    """Raised when a metric is handed nothing to measure."""


@dataclass(frozen=True)
class MetricReport:
    flip_rate: float
    minimality: float
    closeness: float
    fluency: float
    runtime_graph_s: float = 0.0
    runtime_solve_s: float = 0.0
    runtime_edit_s: float = 0.0

    def __post_init__(self):
        for name in ("flip_rate", "minimality", "closeness"):
            value = getattr(self, name)
            if not 0.0 <= value <= 1.0:
                raise ValueError(f"{name} must lie in [0, 1], got {value}")
        if not np.isfinite(self.fluency) or self.fluency < 0:
            raise ValueError(f"fluency must be finite and >= 0, got {self.fluency}")

    def row(self, config_name: str) -> list:
        return [
            config_name,
            self.fluency,
            self.closeness,
            self.flip_rate,
            self.minimality,
            self.runtime_graph_s,
            self.runtime_solve_s,
            self.runtime_edit_s,
        ]


def flip_rate(results: list[EditResult]) -> float:
    if not results:
        raise EmptyInput("no edit results")
    return sum(1 for r in results if r.flipped) / len(results)


def word_levenshtein(a: list[str], b: list[str]) -> int:
    """Classic dynamic-programming edit distance over token lists."""
    if len(a) < len(b):
        a, b = b, a
    previous = list(range(len(b) + 1))
    for i, tok_a in enumerate(a, 1):
        current = [i] + [0] * len(b)
        for j, tok_b in enumerate(b, 1):
            current[j] = min(
                previous[j] + 1,
                current[j - 1] + 1,
                previous[j - 1] + (tok_a != tok_b),
            )
        previous = current
    return previous[len(b)]


def minimality(original_tokens: list[str], edited_tokens: list[str]) -> float:
    """Word-level Levenshtein distance normalized by original length, in [0, 1]."""
    if not original_tokens:
        raise EmptyInput("original token list is empty")
    a = [t.lower() for t in original_tokens]
    b = [t.lower() for t in edited_tokens]
    return min(1.0, word_levenshtein(a, b) / len(a))


def _alignment_scores(from_tokens, to_tokens, table: EmbeddingTable) -> list[float]:
    """Best match per token; OOV tokens match only identical tokens, and
    tokens with no admissible match are excluded."""
    to_set = set(to_tokens)
    in_vocab_to = [t for t in to_tokens if t in table]
    scores = []
    for tok in from_tokens:
        if tok in table:
            best = 1.0 if tok in to_set else 0.0
            if best < 1.0:
                for other in in_vocab_to:
                    best = max(best, table.cosine(tok, other))
                    if best >= 1.0:
                        break
            scores.append(max(0.0, min(1.0, best)))
        elif tok in to_set:
            scores.append(1.0)
        # OOV without an identical twin: excluded
    return scores


def closeness(original_tokens: list[str], edited_tokens: list[str], table: EmbeddingTable) -> float:
    """Greedy-alignment F1 of token embedding similarity, symmetric in its inputs."""
    a = [t.lower() for t in original_tokens]
    b = [t.lower() for t in edited_tokens]
    recall_parts = _alignment_scores(a, b, table)
    precision_parts = _alignment_scores(b, a, table)
    recall = float(np.mean(recall_parts)) if recall_parts else 0.0
    precision = float(np.mean(precision_parts)) if precision_parts else 0.0
    if precision + recall == 0.0:
        return 0.0
    return 2.0 * precision * recall / (precision + recall)


def fluency(original_text: str, edited_text: str, scorer: BigramScorer) -> float:
    """|1 - loss(edited) / loss(original)|; zero means identically distributed."""
    base = scorer.loss(original_text)
    if base == 0.0:
        raise DegenerateLoss("original text has zero language-model loss")
    return abs(1.0 - scorer.loss(edited_text) / base)


def aggregate(
    results: list[EditResult],
    scorer: BigramScorer,
    table: EmbeddingTable,
    timings: dict[str, float] | None = None,
) -> MetricReport:
    """Mean per-instance metrics over a result list plus stage runtimes."""
    if not results:
        raise EmptyInput("no edit results")
    minim, close, flue = [], [], []
    for r in results:
        orig = token_strings(r.original_text)
        edit = token_strings(r.edited_text)
        minim.append(minimality(orig, edit))
        close.append(closeness(orig, edit, table))
        flue.append(fluency(r.original_text, r.edited_text, scorer))
    timings = timings or {}
    return MetricReport(
        flip_rate=flip_rate(results),
        minimality=float(np.mean(minim)),
        closeness=float(np.mean(close)),
        fluency=float(np.mean(flue)),
        runtime_graph_s=float(timings.get("graph", 0.0)),
        runtime_solve_s=float(timings.get("solve", 0.0)),
        runtime_edit_s=float(timings.get("edit", 0.0)),
    )


def write_csv_report(rows: list[tuple[str, MetricReport]], path) -> None:
    """One CSV row per configuration under the fixed schema header."""
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_HEADER.split(","))
        for name, report in rows:
            writer.writerow(report.row(name))


def write_json_report(rows: list[tuple[str, MetricReport]], path) -> None:
    payload = {
        name: {
            "fluency": r.fluency,
            "closeness": r.closeness,
            "flip_rate": r.flip_rate,
            "minimality": r.minimality,
            "runtime_graph_s": r.runtime_graph_s,
            "runtime_solve_s": r.runtime_solve_s,
            "runtime_edit_s": r.runtime_edit_s,
        }
        for name, r in rows
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=2)
