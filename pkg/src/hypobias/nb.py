"""Multinomial naive Bayes over hypothesis unigrams, plus the majority baseline.

All scoring happens in natural-log space.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .corpus import CorpusSplit, Label, LABELS
from .features import Vocabulary, build_vocab, featurize, tokenize

MODEL_SCHEMA_VERSION = 1


@dataclass(frozen=True)
class NbModel:
    alpha: float
    vocab: Vocabulary
    class_log_prior: np.ndarray        # shape (3,), indexed by Label ordinal
    token_log_likelihood: np.ndarray   # shape (3, vocab size)

    def to_json(self) -> str:
        doc = {
            "schema_version": MODEL_SCHEMA_VERSION,
            "alpha": self.alpha,
            "labels": [label.name.lower() for label in LABELS],
            "log_priors": self.class_log_prior.tolist(),
            "vocab": list(self.vocab.tokens),
            "log_likelihoods": self.token_log_likelihood.tolist(),
        }
        return json.dumps(doc)

    @classmethod
    def from_json(cls, text: str) -> "NbModel":
        doc = json.loads(text)
        if doc.get("schema_version") != MODEL_SCHEMA_VERSION:
            raise ValueError(f"unsupported model schema: {doc.get('schema_version')!r}")
        vocab = Vocabulary.from_tokens(doc["vocab"])
        return cls(
            alpha=float(doc["alpha"]),
            vocab=vocab,
            class_log_prior=np.asarray(doc["log_priors"], dtype=float),
            token_log_likelihood=np.asarray(doc["log_likelihoods"], dtype=float),
        )

    def save(self, path: str | Path) -> None:
        Path(path).write_text(self.to_json(), encoding="utf-8")

    @classmethod
    def load(cls, path: str | Path) -> "NbModel":
        return cls.from_json(Path(path).read_text(encoding="utf-8"))


def train_nb(split: CorpusSplit, vocab: Vocabulary | None = None,
             alpha: float = 1.0) -> NbModel:
    """Fit priors and smoothed per-class token likelihoods on hypothesis unigrams."""
    if alpha <= 0:
        raise ValueError(f"alpha must be positive, got {alpha}")
    if vocab is None:
        vocab = build_vocab(split, fields=("hypothesis",))
    n_labels = len(LABELS)
    class_counts = np.zeros(n_labels)
    token_counts = np.zeros((n_labels, vocab.size))
    for pair in split.pairs:
        class_counts[pair.label] += 1
        for idx, count in featurize(tokenize(pair.hypothesis), vocab).items():
            token_counts[pair.label, idx] += count
    if (class_counts == 0).any():
        missing = [label.name for label in LABELS if class_counts[label] == 0]
        raise ValueError(f"labels absent from training split: {', '.join(missing)}")
    class_log_prior = np.log(class_counts) - np.log(class_counts.sum())
    smoothed = token_counts + alpha
    token_log_likelihood = np.log(smoothed) - np.log(smoothed.sum(axis=1, keepdims=True))
    return NbModel(alpha=alpha, vocab=vocab, class_log_prior=class_log_prior,
                   token_log_likelihood=token_log_likelihood)


def predict(model: NbModel, features: dict[int, int]) -> tuple[Label, np.ndarray]:
    """Argmax of prior + count-weighted likelihoods; ordinal tie-break."""
    scores = model.class_log_prior.copy()
    for idx, count in features.items():
        if idx >= model.vocab.size:
            raise ValueError(f"feature index {idx} out of range for vocab size "
                             f"{model.vocab.size}")
        scores += count * model.token_log_likelihood[:, idx]
    return Label(int(np.argmax(scores))), scores


def predict_text(model: NbModel, hypothesis: str) -> Label:
    return predict(model, featurize(tokenize(hypothesis), model.vocab))[0]


def predict_split(model: NbModel, split: CorpusSplit) -> list[Label]:
    return [predict_text(model, pair.hypothesis) for pair in split.pairs]


@dataclass(frozen=True)
class BaselineModel:
    majority: Label
    label_distribution: dict[Label, float]


def train_baseline(split: CorpusSplit) -> BaselineModel:
    """Majority-label baseline from the empirical training distribution."""
    if not split.pairs:
        raise ValueError("cannot train a baseline on an empty split")
    counts = split.label_counts()
    total = len(split.pairs)
    # argmax over Label ordinal order breaks ties toward the lowest ordinal
    majority = max(LABELS, key=lambda label: (counts[label], -label))
    distribution = {label: counts[label] / total for label in LABELS}
    return BaselineModel(majority=majority, label_distribution=distribution)


def predict_baseline(model: BaselineModel) -> Label:
    return model.majority
