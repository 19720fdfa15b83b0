"""File-loaded word-embedding table with cosine similarity lookups.

Format: a header line ``<vocab-size> <dim>`` followed by one line per word,
``<word> <d floats>``.  Vector generation itself is out of scope here; the
table is an input artifact.
"""

from __future__ import annotations

import numpy as np

from .taxonomy import UnknownWord


class EmbeddingTable:
    def __init__(self, words: list[str], vectors: np.ndarray):
        vectors = np.asarray(vectors, dtype=np.float64)
        if vectors.ndim != 2 or len(words) != vectors.shape[0]:
            raise ValueError("one vector per word required")
        if not np.isfinite(vectors).all():
            raise ValueError("embedding vectors must be finite")
        norms = np.linalg.norm(vectors, axis=1)
        if (norms == 0).any():
            raise ValueError("zero embedding vectors are not allowed")
        if len(set(words)) != len(words):
            raise ValueError("duplicate words in embedding table")
        self._index = {w: k for k, w in enumerate(words)}
        self._vectors = vectors
        self._norms = norms
        self.dimension = vectors.shape[1]

    def __contains__(self, word: str) -> bool:
        return word in self._index

    def __len__(self) -> int:
        return len(self._index)

    @property
    def vocabulary(self) -> set[str]:
        return set(self._index)

    def vector(self, word: str) -> np.ndarray:
        try:
            return self._vectors[self._index[word]]
        except KeyError:
            raise UnknownWord(word) from None

    def cosine(self, word_a: str, word_b: str) -> float:
        ka = self._index.get(word_a)
        kb = self._index.get(word_b)
        if ka is None:
            raise UnknownWord(word_a)
        if kb is None:
            raise UnknownWord(word_b)
        num = float(self._vectors[ka] @ self._vectors[kb])
        return num / float(self._norms[ka] * self._norms[kb])


def embedding_similarity(table: EmbeddingTable, word_a: str, word_b: str) -> float:
    """Cosine similarity in [-1, 1]."""
    return table.cosine(word_a, word_b)


def load_embeddings(path) -> EmbeddingTable:
    with open(path, encoding="utf-8") as fh:
        header = fh.readline().split()
        if len(header) != 2:
            raise ValueError("embedding file must start with '<vocab-size> <dim>'")
        count, dim = int(header[0]), int(header[1])
        words: list[str] = []
        rows = np.empty((count, dim))
        for k in range(count):
            parts = fh.readline().split()
            if len(parts) != dim + 1:
                raise ValueError(f"embedding row {k} malformed")
            words.append(parts[0])
            rows[k] = [float(x) for x in parts[1:]]
    return EmbeddingTable(words, rows)
