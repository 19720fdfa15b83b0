"""Reversible word tokenizer shared by graph building, editing, and metrics.

Tokens keep their character spans so edited documents can be rebuilt by
splicing replacements into the original string.  Lookup happens on the
lowercased form; the original casing is preserved for re-insertion.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

_TOKEN_RE = re.compile(r"[A-Za-z]+(?:'[A-Za-z]+)*|[0-9]+|[^\sA-Za-z0-9]")


@dataclass(frozen=True)
class Token:
    text: str
    start: int
    end: int
    is_word: bool

    @property
    def lower(self) -> str:
        return self.text.lower()


def tokenize(text: str) -> list[Token]:
    tokens = []
    for match in _TOKEN_RE.finditer(text):
        piece = match.group(0)
        tokens.append(Token(piece, match.start(), match.end(), piece[0].isalpha()))
    return tokens


def token_strings(text: str) -> list[str]:
    """Lowercased token texts (words and punctuation alike), for the metrics."""
    return [t.lower for t in tokenize(text)]


def match_casing(template: str, word: str) -> str:
    """Give `word` the capitalization pattern of `template`."""
    if template.isupper() and len(template) > 1:
        return word.upper()
    if template[:1].isupper():
        return word.capitalize()
    return word.lower()


def replace_tokens(text: str, tokens: list[Token], replacements: dict[int, str]) -> str:
    """Rebuild `text` with tokens at the given indices replaced (casing adapted)."""
    out = []
    cursor = 0
    for idx, token in enumerate(tokens):
        if idx in replacements:
            out.append(text[cursor:token.start])
            out.append(match_casing(token.text, replacements[idx]))
            cursor = token.end
    out.append(text[cursor:])
    return "".join(out)
