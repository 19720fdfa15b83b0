"""Builds the bipartite substitution graph from a document collection.

Source nodes are the deduplicated extracted words (optionally restricted to
certain POS tags); target nodes are either a copy of the sources or the
union of their antonyms.  The graph is dense: every source connects to every
distinct target, weighted by word similarity mapped to a positive cost, so
minimum-weight matchings pick the most dissimilar (most contrastive) pairs.
An optional edge filter multiplies the cost of POS-crossing edges by a large
penalty so matchings preserve part of speech.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..assignment.types import BipartiteGraph, Matching
from .embeddings import EmbeddingTable
from .taxonomy import PosTag, Taxonomy, pos_tag
from .tokenize import tokenize

EMBED_COST_FLOOR = 1e-3


class EmptyGraph(ValueError):
    """Raised when no source word survives extraction and filtering."""


@dataclass(frozen=True)
class GraphBuildConfig:
    pos_tags: frozenset[PosTag] | None = None  # None = POS-agnostic
    weight_provider: str = "taxonomy"  # "taxonomy" | "embedding"
    target_mode: str = "copy"  # "copy" | "antonyms"
    edge_filter_enabled: bool = False
    penalty_factor: float = 10.0

    def __post_init__(self):
        if self.weight_provider not in ("taxonomy", "embedding"):
            raise ValueError(f"unknown weight provider {self.weight_provider!r}")
        if self.target_mode not in ("copy", "antonyms"):
            raise ValueError(f"unknown target mode {self.target_mode!r}")
        if self.penalty_factor < 1:
            raise ValueError("penalty_factor must be >= 1")


@dataclass
class GraphBuildResult:
    """Graph plus the provenance needed to turn matchings back into edits."""

    graph: BipartiteGraph
    swapped: bool  # True when candidates ended up on the row side
    occurrences: dict[str, list[tuple[str, int]]]  # document word -> (doc id, token index)
    word_pos: dict[str, PosTag] = field(default_factory=dict)
    config: GraphBuildConfig = field(default_factory=GraphBuildConfig)

    @property
    def document_words(self) -> tuple[str, ...]:
        return self.graph.target_words if self.swapped else self.graph.source_words

    @property
    def candidate_words(self) -> tuple[str, ...]:
        return self.graph.source_words if self.swapped else self.graph.target_words

    def substitutions(self, matching: Matching) -> dict[str, tuple[str, float]]:
        """Map document word -> (replacement word, edge cost) for a matching."""
        weight = {(s, t): w for s, t, w in self.graph.edges}
        out: dict[str, tuple[str, float]] = {}
        for i, j in matching.pairs:
            if self.swapped:
                doc_word = self.graph.target_words[j]
                candidate = self.graph.source_words[i]
            else:
                doc_word = self.graph.source_words[i]
                candidate = self.graph.target_words[j]
            out[doc_word] = (candidate, weight[(i, j)])
        return out


def candidate_targets(
    word: str,
    config: GraphBuildConfig,
    taxonomy: Taxonomy,
    source_words: "set[str] | None" = None,
) -> set[str]:
    """Candidate substitutions for one source word.

    Copy mode returns the other source words; antonym mode returns the union
    of the word's antonyms (possibly empty — such words keep only incoming
    candidates from other sources, a documented controllability exception).
    """
    if config.target_mode == "copy":
        pool = set(source_words or ())
        pool.discard(word)
        return pool
    return taxonomy.antonyms(word)


def extract_sources(
    documents: list[tuple[str, str]],
    config: GraphBuildConfig,
    taxonomy: Taxonomy | None,
    embeddings: EmbeddingTable | None,
) -> tuple[list[str], dict[str, list[tuple[str, int]]]]:
    """Deduplicated extracted words (first-seen order) plus their occurrences.

    Words missing from the active weight provider are skipped as sources;
    POS-specific extraction keeps only the requested tags.
    """
    occurrences: dict[str, list[tuple[str, int]]] = {}
    order: list[str] = []
    for doc_id, text in documents:
        for idx, token in enumerate(tokenize(text)):
            if not token.is_word:
                continue
            word = token.lower
            if word not in occurrences:
                occurrences[word] = []
                order.append(word)
            occurrences[word].append((doc_id, idx))

    vocab_ok = _provider_membership(config, taxonomy, embeddings)
    sources = []
    for word in order:
        if not vocab_ok(word):
            continue
        if config.pos_tags is not None:
            if taxonomy is None:
                raise ValueError("POS-specific extraction requires a taxonomy")
            if pos_tag(word, taxonomy) not in config.pos_tags:
                continue
        sources.append(word)
    return sources, {w: occurrences[w] for w in sources}


def _provider_membership(config, taxonomy, embeddings):
    if config.weight_provider == "taxonomy":
        if taxonomy is None:
            raise ValueError("taxonomy provider not loaded")
        return lambda w: w in taxonomy
    if embeddings is None:
        raise ValueError("embedding provider not loaded")
    return lambda w: w in embeddings


def _similarity_matrix(rows, cols, config, taxonomy, embeddings) -> np.ndarray:
    if config.weight_provider == "embedding":
        vr = np.stack([embeddings.vector(w) for w in rows])
        vc = np.stack([embeddings.vector(w) for w in cols])
        vr = vr / np.linalg.norm(vr, axis=1, keepdims=True)
        vc = vc / np.linalg.norm(vc, axis=1, keepdims=True)
        return vr @ vc.T
    dist = taxonomy._dist
    index = taxonomy._index
    row_best = np.stack(
        [
            dist[[index[s] for s in taxonomy._word_synsets[w]]].min(axis=0)
            for w in rows
        ]
    )
    sims = np.empty((len(rows), len(cols)))
    for j, w in enumerate(cols):
        ks = [index[s] for s in taxonomy._word_synsets[w]]
        sims[:, j] = 1.0 / (1.0 + row_best[:, ks].min(axis=1))
    return sims


def _costs_from_similarity(sims: np.ndarray, config: GraphBuildConfig) -> np.ndarray:
    if config.weight_provider == "embedding":
        return np.clip((1.0 + sims) / 2.0, EMBED_COST_FLOOR, 1.0)
    return sims  # path similarity already sits in (0, 1]


def build_graph(
    documents: list[tuple[str, str]],
    config: GraphBuildConfig,
    taxonomy: Taxonomy | None = None,
    embeddings: EmbeddingTable | None = None,
) -> GraphBuildResult:
    """Construct the dense substitution graph for a document collection.

    The side with fewer words becomes the row (source) side to satisfy the
    rectangular orientation; ``GraphBuildResult.swapped`` records when that
    put the candidates on the rows.
    """
    sources, occurrences = extract_sources(documents, config, taxonomy, embeddings)
    if not sources:
        raise EmptyGraph("no source words survived extraction/filtering")

    if config.target_mode == "copy":
        targets = list(sources)
    else:
        if taxonomy is None:
            raise ValueError("antonym targets require a taxonomy")
        vocab_ok = _provider_membership(config, taxonomy, embeddings)
        seen = set()
        targets = []
        for word in sources:
            for ant in sorted(taxonomy.antonyms(word)):
                if ant not in seen and vocab_ok(ant):
                    seen.add(ant)
                    targets.append(ant)
        if not targets:
            raise EmptyGraph("antonym mode produced no candidate targets")

    swapped = len(targets) < len(sources)
    rows, cols = (targets, sources) if swapped else (sources, targets)

    sims = _similarity_matrix(rows, cols, config, taxonomy, embeddings)
    costs = _costs_from_similarity(sims, config)

    word_pos: dict[str, PosTag] = {}
    if taxonomy is not None:
        for word in set(rows) | set(cols):
            word_pos[word] = pos_tag(word, taxonomy)

    if config.edge_filter_enabled:
        if taxonomy is None:
            raise ValueError("edge filtering requires a taxonomy for POS tags")
        row_pos = np.array([word_pos[w].value for w in rows], dtype=object)
        col_pos = np.array([word_pos[w].value for w in cols], dtype=object)
        crossing = row_pos[:, None] != col_pos[None, :]
        costs = np.where(crossing, costs * config.penalty_factor, costs)

    edges = []
    for i, rw in enumerate(rows):
        for j, cw in enumerate(cols):
            if rw == cw:
                continue  # a word never substitutes itself
            edges.append((i, j, float(costs[i, j])))
    if not edges:
        raise EmptyGraph("graph has no feasible substitution edges")

    graph = BipartiteGraph(tuple(rows), tuple(cols), tuple(edges))
    return GraphBuildResult(graph, swapped, occurrences, word_pos, config)
