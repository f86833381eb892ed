"""Tokenization, vocabulary construction, and unigram count features."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from .corpus import CorpusSplit, SentencePair

# Punctuation stripped from the ends of whitespace-separated pieces.
STRIP_CHARS = ".,!?;:\"'()"

FIELD_NAMES = ("premise", "hypothesis")


def tokenize(text: str) -> list[str]:
    """Lowercase, split on whitespace, strip edge punctuation, drop empties."""
    tokens = []
    for piece in text.lower().split():
        stripped = piece.strip(STRIP_CHARS)
        if stripped:
            tokens.append(stripped)
    return tokens


@dataclass(frozen=True)
class Vocabulary:
    tokens: tuple[str, ...]
    index: dict[str, int]

    @property
    def size(self) -> int:
        return len(self.tokens)

    def __contains__(self, token: str) -> bool:
        return token in self.index

    @classmethod
    def from_tokens(cls, token_stream: Iterable[str]) -> "Vocabulary":
        """Build a vocabulary assigning indices in first-occurrence order."""
        index: dict[str, int] = {}
        for token in token_stream:
            if token not in index:
                index[token] = len(index)
        return cls(tokens=tuple(index), index=index)


def _field_tokens(pair: SentencePair, fields: Sequence[str]) -> Iterable[str]:
    for field in fields:
        yield from tokenize(getattr(pair, field))


def build_vocab(split: CorpusSplit, fields: Sequence[str] = ("hypothesis",)) -> Vocabulary:
    for field in fields:
        if field not in FIELD_NAMES:
            raise ValueError(f"unknown field: {field!r}")
    def stream():
        for pair in split.pairs:
            yield from _field_tokens(pair, fields)
    return Vocabulary.from_tokens(stream())


def featurize(tokens: Sequence[str], vocab: Vocabulary) -> dict[int, int]:
    """Count in-vocabulary tokens; out-of-vocabulary tokens are dropped."""
    counts: Counter[int] = Counter()
    for token in tokens:
        idx = vocab.index.get(token)
        if idx is not None:
            counts[idx] += 1
    return dict(counts)
