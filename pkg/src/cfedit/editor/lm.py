"""Bigram language model used as the fluency scorer.

Add-0.5 smoothed bigram negative log likelihood per token, fit on the
original corpus.  The editor and metrics only consume ``loss(text)``, so a
heavier scorer can be swapped in behind the same method.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from ..lexicon.tokenize import token_strings

_BOS = "<s>"
_SMOOTH = 0.5


class DegenerateLoss(ValueError):
    """Raised when a loss ratio would divide by zero."""


@dataclass
class BigramScorer:
    vocabulary: frozenset[str]
    bigram_counts: dict[tuple[str, str], int] = field(repr=False)
    context_counts: dict[str, int] = field(repr=False)

    @classmethod
    def fit(cls, texts: list[str]) -> "BigramScorer":
        vocab: set[str] = set()
        bigrams: dict[tuple[str, str], int] = {}
        contexts: dict[str, int] = {}
        for text in texts:
            tokens = token_strings(text)
            vocab.update(tokens)
            prev = _BOS
            for tok in tokens:
                bigrams[(prev, tok)] = bigrams.get((prev, tok), 0) + 1
                contexts[prev] = contexts.get(prev, 0) + 1
                prev = tok
        return cls(frozenset(vocab), bigrams, contexts)

    def _token_logprob(self, prev: str, cur: str) -> float:
        # unknown words share one <unk> type inside the V+1 smoothing mass
        denom = self.context_counts.get(prev, 0) + _SMOOTH * (len(self.vocabulary) + 1)
        num = self.bigram_counts.get((prev, cur), 0) + _SMOOTH
        return math.log(num / denom)

    def loss(self, text: str) -> float:
        """Mean negative log probability per token (always > 0 under smoothing)."""
        tokens = token_strings(text)
        if not tokens:
            raise DegenerateLoss("cannot score an empty text")
        prev = _BOS
        total = 0.0
        for tok in tokens:
            cur = tok if tok in self.vocabulary else "<unk>"
            total -= self._token_logprob(prev, cur)
            prev = cur
        return total / len(tokens)
