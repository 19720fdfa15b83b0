"""File-loaded lexical taxonomy: synsets, hypernym links, antonyms, POS.

The file format is line oriented:

    synset <id> <pos> <word,word,...>
    hyper <child-id> <parent-id>
    ant <word> <word>

Word similarity is 1 / (1 + L) with L the shortest hypernym-path length
between the closest synsets of the two words.  Synsets without a hypernym
are attached to a shared virtual root so every pair of words is connected
and the similarity stays total (the same trick NLTK uses for verbs).
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field

import numpy as np


class UnknownWord(KeyError):
    """Raised when a word is absent from a provider."""


class PosTag(enum.Enum):
    NOUN = "noun"
    VERB = "verb"
    ADJ = "adj"
    ADV = "adv"
    OTHER = "other"

    @classmethod
    def parse(cls, text: str) -> "PosTag":
        return cls(text.strip().lower())


# tie-break order for majority voting
_POS_ORDER = (PosTag.NOUN, PosTag.VERB, PosTag.ADJ, PosTag.ADV, PosTag.OTHER)


@dataclass(frozen=True)
class Synset:
    id: str
    pos: PosTag
    words: tuple[str, ...]


@dataclass
class Taxonomy:
    synsets: dict[str, Synset]
    hypernyms: dict[str, list[str]]  # child id -> parent ids
    antonym_links: dict[str, set[str]]
    _word_synsets: dict[str, list[str]] = field(default_factory=dict, repr=False)
    _dist: np.ndarray | None = field(default=None, repr=False)
    _index: dict[str, int] = field(default_factory=dict, repr=False)

    def __post_init__(self):
        for sid, synset in self.synsets.items():
            for word in synset.words:
                self._word_synsets.setdefault(word, []).append(sid)
        self._check_acyclic()
        self._check_antonym_pos()
        self._precompute_distances()

    # -- invariants ------------------------------------------------------

    def _check_acyclic(self):
        state: dict[str, int] = {}

        def visit(sid: str):
            state[sid] = 1
            for parent in self.hypernyms.get(sid, ()):
                s = state.get(parent, 0)
                if s == 1:
                    raise ValueError(f"hypernym cycle through {parent}")
                if s == 0:
                    visit(parent)
            state[sid] = 2

        for sid in self.synsets:
            if state.get(sid, 0) == 0:
                visit(sid)

    def _check_antonym_pos(self):
        for a, partners in self.antonym_links.items():
            for b in partners:
                pa = {self.synsets[s].pos for s in self._word_synsets.get(a, ())}
                pb = {self.synsets[s].pos for s in self._word_synsets.get(b, ())}
                if not pa or not pb:
                    raise ValueError(f"antonym link references unknown word: {a}/{b}")
                if not pa & pb:
                    raise ValueError(f"antonym link crosses POS: {a}/{b}")

    # -- distances ---------------------------------------------------------

    def _precompute_distances(self):
        """All-pairs shortest synset paths over the undirected hypernym graph
        plus a virtual root joining every top synset."""
        ids = sorted(self.synsets)
        self._index = {sid: k for k, sid in enumerate(ids)}
        root = len(ids)  # virtual node
        adj: list[list[int]] = [[] for _ in range(root + 1)]
        for sid in ids:
            k = self._index[sid]
            parents = self.hypernyms.get(sid, [])
            if not parents:
                adj[k].append(root)
                adj[root].append(k)
            for parent in parents:
                p = self._index[parent]
                adj[k].append(p)
                adj[p].append(k)
        size = root + 1
        dist = np.full((size, size), -1, dtype=np.int32)
        for start in range(size):
            row = dist[start]
            row[start] = 0
            queue = deque([start])
            while queue:
                cur = queue.popleft()
                for nxt in adj[cur]:
                    if row[nxt] < 0:
                        row[nxt] = row[cur] + 1
                        queue.append(nxt)
        self._dist = dist

    # -- lookups -----------------------------------------------------------

    def __contains__(self, word: str) -> bool:
        return word in self._word_synsets

    def word_synsets(self, word: str) -> list[Synset]:
        try:
            return [self.synsets[sid] for sid in self._word_synsets[word]]
        except KeyError:
            raise UnknownWord(word) from None

    def antonyms(self, word: str) -> set[str]:
        return set(self.antonym_links.get(word, ()))

    @property
    def vocabulary(self) -> set[str]:
        return set(self._word_synsets)


def load_taxonomy(path) -> Taxonomy:
    with open(path, encoding="utf-8") as fh:
        return parse_taxonomy(fh.read())


def parse_taxonomy(text: str) -> Taxonomy:
    synsets: dict[str, Synset] = {}
    hypernyms: dict[str, list[str]] = {}
    antonyms: dict[str, set[str]] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        kind, *rest = line.split()
        if kind == "synset":
            sid, pos, words = rest[0], rest[1], rest[2]
            if sid in synsets:
                raise ValueError(f"line {lineno}: duplicate synset id {sid}")
            members = tuple(w for w in words.split(",") if w)
            if not members:
                raise ValueError(f"line {lineno}: synset {sid} has no words")
            synsets[sid] = Synset(sid, PosTag.parse(pos), members)
        elif kind == "hyper":
            child, parent = rest
            hypernyms.setdefault(child, []).append(parent)
        elif kind == "ant":
            a, b = rest
            antonyms.setdefault(a, set()).add(b)
            antonyms.setdefault(b, set()).add(a)
        else:
            raise ValueError(f"line {lineno}: unknown record {kind!r}")
    for child, parents in hypernyms.items():
        for sid in (child, *parents):
            if sid not in synsets:
                raise ValueError(f"hyper line references unknown synset {sid}")
    return Taxonomy(synsets, hypernyms, antonyms)


def synset_distance(taxonomy: Taxonomy, sid_a: str, sid_b: str) -> int:
    return int(taxonomy._dist[taxonomy._index[sid_a], taxonomy._index[sid_b]])


def path_similarity(taxonomy: Taxonomy, word_a: str, word_b: str) -> float:
    """1 / (1 + shortest path) over the closest synset pair; 1.0 for shared synsets."""
    ids_a = taxonomy._word_synsets.get(word_a)
    ids_b = taxonomy._word_synsets.get(word_b)
    if not ids_a:
        raise UnknownWord(word_a)
    if not ids_b:
        raise UnknownWord(word_b)
    ka = [taxonomy._index[s] for s in ids_a]
    kb = [taxonomy._index[s] for s in ids_b]
    shortest = int(taxonomy._dist[np.ix_(ka, kb)].min())
    return 1.0 / (1.0 + shortest)


def pos_tag(token: str, taxonomy: Taxonomy) -> PosTag:
    """Majority POS over the token's synsets; OTHER when the word is unknown."""
    if not token:
        raise ValueError("empty token")
    ids = taxonomy._word_synsets.get(token.lower())
    if not ids:
        return PosTag.OTHER
    counts: dict[PosTag, int] = {}
    for sid in ids:
        pos = taxonomy.synsets[sid].pos
        counts[pos] = counts.get(pos, 0) + 1
    best = max(counts.values())
    for pos in _POS_ORDER:
        if counts.get(pos, 0) == best:
            return pos
    raise AssertionError("unreachable")
