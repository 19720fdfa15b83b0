"""Editor configuration and result records."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field


class Heuristic(enum.Enum):
    FLUENCY = "fluency"
    CONTRASTIVE = "contrastive"
    FLUENCY_CONTRASTIVE = "fluency_contrastive"

    @classmethod
    def parse(cls, text: str) -> "Heuristic":
        return cls(text.strip().lower())


class ScorerUnavailable(RuntimeError):
    """Raised when a heuristic needs a scorer/classifier that was not supplied."""


@dataclass(frozen=True)
class EditConfig:
    heuristic: Heuristic = Heuristic.FLUENCY
    threshold_mode: str = "static"  # "static" | "dynamic"
    static_limit: int = 10
    dynamic_fraction: float = 0.20
    beam_width: int = 5
    stop_on_flip: bool = True

    def __post_init__(self):
        if self.threshold_mode not in ("static", "dynamic"):
            raise ValueError(f"unknown threshold mode {self.threshold_mode!r}")
        if self.static_limit < 1:
            raise ValueError("static limit must be >= 1")
        if not 0 < self.dynamic_fraction <= 1:
            raise ValueError("dynamic fraction must lie in (0, 1]")
        if self.beam_width < 1:
            raise ValueError("beam width must be >= 1")


@dataclass(frozen=True)
class SubstitutionPlan:
    """Solver output, ready for beam search: one replacement per source word."""

    pairs: dict[str, tuple[str, float]]  # source word -> (target word, edge cost)
    occurrences: dict[str, list[tuple[str, int]]] = field(default_factory=dict)

    def __post_init__(self):
        for word, (target, cost) in self.pairs.items():
            if word == target:
                raise ValueError(f"plan maps {word!r} to itself")
            if not (math.isfinite(cost) and cost > 0):
                raise ValueError(f"plan pair {word!r}->{target!r} has bad cost {cost}")


@dataclass
class EditResult:
    doc_id: str
    original_text: str
    edited_text: str
    applied_substitutions: list[tuple[int, str, str]]  # (token index, source, target)
    original_label: str
    original_prob: float
    edited_label: str
    edited_prob: float
    flipped: bool
    heuristic_trace: list[float] = field(default_factory=list)
    note: str | None = None

    def to_dict(self) -> dict:
        return {
            "doc_id": self.doc_id,
            "original_text": self.original_text,
            "edited_text": self.edited_text,
            "applied_substitutions": [list(s) for s in self.applied_substitutions],
            "original_label": self.original_label,
            "original_prob": self.original_prob,
            "edited_label": self.edited_label,
            "edited_prob": self.edited_prob,
            "flipped": self.flipped,
            "heuristic_trace": self.heuristic_trace,
            "note": self.note,
        }

    @classmethod
    def from_dict(cls, rec: dict) -> "EditResult":
        return cls(
            doc_id=rec["doc_id"],
            original_text=rec["original_text"],
            edited_text=rec["edited_text"],
            applied_substitutions=[tuple(s) for s in rec["applied_substitutions"]],
            original_label=rec["original_label"],
            original_prob=rec["original_prob"],
            edited_label=rec["edited_label"],
            edited_prob=rec["edited_prob"],
            flipped=rec["flipped"],
            heuristic_trace=list(rec.get("heuristic_trace", ())),
            note=rec.get("note"),
        )
