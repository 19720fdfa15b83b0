"""Beam search over substitution subsets, one document at a time.

States are sets of applied plan words; applying a word replaces every one of
its occurrences at once.  Each step expands every beam state by one unused
applicable word and ranks the candidate pool with the configured heuristic;
the search stops when the top-ranked state flips the prediction (when
enabled), when the substitution limit is reached, or when expansions run
out.  The returned state is the best one visited anywhere in the search,
preferring flips over heuristic score, then fewer substitutions, then
lexicographic word order — so a document containing at least one plan word
always receives at least one substitution.
"""

from __future__ import annotations

import logging
import math

import numpy as np

from ..classifier import TextClassifier, predict_proba
from ..lexicon.tokenize import replace_tokens, tokenize
from .lm import BigramScorer
from .types import EditConfig, EditResult, Heuristic, ScorerUnavailable, SubstitutionPlan

log = logging.getLogger(__name__)


def substitution_limit(text: str, config: EditConfig) -> int:
    """Maximum substitutions for one document: a fixed cap, or a fraction of
    its word count (floored, but never below one)."""
    if config.threshold_mode == "static":
        return config.static_limit
    words = sum(1 for t in tokenize(text) if t.is_word)
    return max(1, math.floor(config.dynamic_fraction * words))


def _minmax(values: np.ndarray) -> np.ndarray:
    lo, hi = float(values.min()), float(values.max())
    if hi - lo < 1e-12:
        return np.full(values.shape, 0.5)
    return (values - lo) / (hi - lo)


def _fluency_raw(texts, original_text, scorer) -> np.ndarray:
    if scorer is None:
        raise ScorerUnavailable("fluency heuristic needs a language-model scorer")
    base = scorer.loss(original_text)
    return np.array([-abs(1.0 - scorer.loss(t) / base) for t in texts])


def _contrastive_raw(texts, original_text, classifier) -> np.ndarray:
    if classifier is None:
        raise ScorerUnavailable("contrastive heuristic needs a classifier")
    base = predict_proba(classifier, original_text)
    k = int(np.argmax(base))
    return np.array([base[k] - predict_proba(classifier, t)[k] for t in texts])


def score_candidates(
    texts: list[str],
    original_text: str,
    heuristic: Heuristic,
    scorer: BigramScorer | None = None,
    classifier: TextClassifier | None = None,
) -> np.ndarray:
    """Heuristic scores (higher = better) for a pool of candidate edits.

    The combined mode min-max normalizes both components inside the pool
    before averaging, since their raw scales are incommensurable.
    """
    if heuristic is Heuristic.FLUENCY:
        return _fluency_raw(texts, original_text, scorer)
    if heuristic is Heuristic.CONTRASTIVE:
        return _contrastive_raw(texts, original_text, classifier)
    flu = _minmax(_fluency_raw(texts, original_text, scorer))
    con = _minmax(_contrastive_raw(texts, original_text, classifier))
    return (flu + con) / 2.0


def heuristic_score(
    candidate_text: str,
    original_text: str,
    heuristic: Heuristic,
    scorer: BigramScorer | None = None,
    classifier: TextClassifier | None = None,
) -> float:
    """Score a single candidate (combined mode degenerates to 0.5 alone)."""
    return float(score_candidates([candidate_text], original_text, heuristic, scorer, classifier)[0])


def beam_search_edit(
    doc_id: str,
    text: str,
    plan: SubstitutionPlan,
    config: EditConfig,
    scorer: BigramScorer | None = None,
    classifier: TextClassifier | None = None,
) -> EditResult:
    if classifier is None:
        raise ScorerUnavailable("beam search needs a classifier for flip detection")
    tokens = tokenize(text)
    base_probs = predict_proba(classifier, text)
    orig_idx = int(np.argmax(base_probs))
    orig_label = classifier.labels[orig_idx]
    orig_prob = float(base_probs[orig_idx])

    positions: dict[str, list[int]] = {}
    for idx, token in enumerate(tokens):
        if token.is_word and token.lower in plan.pairs:
            positions.setdefault(token.lower, []).append(idx)
    applicable = sorted(positions)
    if not applicable:
        log.info("controllability exception: no plan word occurs in document %s", doc_id)
        return EditResult(
            doc_id, text, text, [], orig_label, orig_prob, orig_label, orig_prob,
            flipped=False, heuristic_trace=[], note="no plan word occurs in document",
        )

    def build_text(words: frozenset) -> str:
        repl = {}
        for w in words:
            target = plan.pairs[w][0]
            for idx in positions[w]:
                repl[idx] = target
        return replace_tokens(text, tokens, repl)

    limit = substitution_limit(text, config)
    weight = {w: len(positions[w]) for w in applicable}  # positions touched per word
    beam: list[frozenset] = [frozenset()]
    trace: list[float] = []
    best_key: tuple | None = None  # (flipped, score, -num_subs); ties: first seen wins
    best_state: tuple | None = None  # (words, edited_text, label, prob, flipped)

    for _ in range(limit):
        pool: dict[frozenset, str] = {}
        for state in beam:
            used = sum(weight[w] for w in state)
            for word in applicable:
                if word in state or used + weight[word] > limit:
                    continue  # the limit bounds substituted positions, not words
                candidate = state | {word}
                if candidate not in pool:
                    pool[candidate] = build_text(candidate)
        if not pool:
            break
        states = sorted(pool, key=lambda s: tuple(sorted(s)))
        texts = [pool[s] for s in states]
        scores = score_candidates(texts, text, config.heuristic, scorer, classifier)

        flips = []
        for state, cand_text, score in zip(states, texts, scores):
            probs = predict_proba(classifier, cand_text)
            k = int(np.argmax(probs))
            label = classifier.labels[k]
            flipped = label != orig_label
            flips.append(flipped)
            key = (flipped, float(score), -len(state))
            if best_key is None or key > best_key:
                best_key = key
                best_state = (state, cand_text, label, float(probs[k]), flipped)
        trace.append(float(scores.max()))

        order = sorted(
            range(len(states)), key=lambda k: (-scores[k], tuple(sorted(states[k])))
        )
        if config.stop_on_flip and flips[order[0]]:
            break  # the top-ranked state already flips the prediction
        beam = [states[k] for k in order[: config.beam_width]]

    if best_state is None:
        # every applicable word occurs more often than the limit allows
        log.info("controllability exception: limit %d below every applicable "
                 "word's occurrence count in document %s", limit, doc_id)
        return EditResult(
            doc_id, text, text, [], orig_label, orig_prob, orig_label, orig_prob,
            flipped=False, heuristic_trace=[],
            note="substitution limit below every applicable word's occurrence count",
        )

    words, edited_text, edited_label, edited_prob, flipped = best_state
    applied = sorted(
        (idx, w, plan.pairs[w][0]) for w in words for idx in positions[w]
    )
    return EditResult(
        doc_id, text, edited_text, applied,
        orig_label, orig_prob, edited_label, edited_prob,
        flipped=flipped, heuristic_trace=trace,
    )
