"""Confusion matrices, descriptive statistics, and audit report assembly."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

from .corpus import Corpus, CorpusSplit, Label, LABELS
from .features import Vocabulary, build_vocab, tokenize
from .partition import PartitionManifest
from .stattest import SignTestResult

REPORT_SCHEMA_VERSION = 1

DEFAULT_SIGNIFICANCE = 0.01


@dataclass(frozen=True)
class ConfusionMatrix:
    """3x3 counts; rows are predicted labels, columns are gold labels."""

    counts: tuple[tuple[int, int, int], ...]

    @classmethod
    def from_predictions(cls, predictions: Sequence[Label],
                         gold: Sequence[Label]) -> "ConfusionMatrix":
        if len(predictions) != len(gold):
            raise ValueError(f"length mismatch: {len(predictions)} vs {len(gold)}")
        counts = [[0, 0, 0] for _ in LABELS]
        for pred, actual in zip(predictions, gold):
            counts[pred][actual] += 1
        return cls(counts=tuple(tuple(row) for row in counts))

    @property
    def total(self) -> int:
        return sum(sum(row) for row in self.counts)

    @property
    def trace(self) -> int:
        return sum(self.counts[i][i] for i in range(len(LABELS)))

    def column_sums(self) -> tuple[int, ...]:
        return tuple(sum(self.counts[r][c] for r in range(len(LABELS)))
                     for c in range(len(LABELS)))

    def row_sums(self) -> tuple[int, ...]:
        return tuple(sum(row) for row in self.counts)

    @property
    def accuracy(self) -> float:
        return self.trace / self.total if self.total else 0.0


def confusion(predictions: Sequence[Label], gold: Sequence[Label]) -> ConfusionMatrix:
    return ConfusionMatrix.from_predictions(predictions, gold)


@dataclass(frozen=True)
class DescriptiveStats:
    premise_mean_tokens: float
    hypothesis_mean_tokens: float
    vocab_size_train: int
    vocab_size_test: int
    oov_ratio_test: float        # token-level (occurrence-weighted)
    oov_ratio_test_type: float   # type-level, reported alongside


def _token_count_means(corpus: Corpus) -> tuple[float, float]:
    premise_total = hypothesis_total = pairs = 0
    for split in (corpus.train, corpus.dev, corpus.test):
        for pair in split.pairs:
            premise_total += len(tokenize(pair.premise))
            hypothesis_total += len(tokenize(pair.hypothesis))
            pairs += 1
    if pairs == 0:
        return 0.0, 0.0
    return premise_total / pairs, hypothesis_total / pairs


def _oov_ratios(test_split: CorpusSplit, reference: Vocabulary) -> tuple[float, float]:
    token_total = token_oov = 0
    types: set[str] = set()
    for pair in test_split.pairs:
        for token in (*tokenize(pair.premise), *tokenize(pair.hypothesis)):
            token_total += 1
            types.add(token)
            if token not in reference:
                token_oov += 1
    type_oov = sum(1 for token in types if token not in reference)
    token_ratio = token_oov / token_total if token_total else 0.0
    type_ratio = type_oov / len(types) if types else 0.0
    return token_ratio, type_ratio


def descriptive_stats(corpus: Corpus) -> DescriptiveStats:
    """Token means (all splits pooled), vocab sizes, and test OOV ratios."""
    premise_mean, hypothesis_mean = _token_count_means(corpus)
    train_vocab = build_vocab(corpus.train, fields=("premise", "hypothesis"))
    test_vocab = build_vocab(corpus.test, fields=("premise", "hypothesis"))
    token_ratio, type_ratio = _oov_ratios(corpus.test, train_vocab)
    return DescriptiveStats(
        premise_mean_tokens=premise_mean,
        hypothesis_mean_tokens=hypothesis_mean,
        vocab_size_train=train_vocab.size,
        vocab_size_test=test_vocab.size,
        oov_ratio_test=token_ratio,
        oov_ratio_test_type=type_ratio,
    )


def cross_corpus_oov(test_split: CorpusSplit, reference_train: CorpusSplit) -> float:
    """Token-level OOV ratio of a test split against another corpus's train vocab."""
    reference = build_vocab(reference_train, fields=("premise", "hypothesis"))
    return _oov_ratios(test_split, reference)[0]


@dataclass(frozen=True)
class AuditReport:
    corpus_id: str
    alpha: float
    significance: float
    nb_accuracy: float
    baseline_accuracy: float
    sign_test: SignTestResult
    confusion: ConfusionMatrix
    partition: PartitionManifest
    stats: DescriptiveStats

    @property
    def verdict(self) -> str:
        biased = (self.sign_test.p_two_sided < self.significance
                  and self.nb_accuracy > self.baseline_accuracy)
        return "biased" if biased else "not-biased"


def report_to_json(report: AuditReport) -> str:
    breakdown = report.partition.per_label_breakdown or {}
    doc = {
        "schema_version": REPORT_SCHEMA_VERSION,
        "corpus_id": report.corpus_id,
        "alpha": report.alpha,
        "significance": report.significance,
        "nb_accuracy": report.nb_accuracy,
        "baseline_accuracy": report.baseline_accuracy,
        "verdict": report.verdict,
        "sign_test": {
            "n_plus": report.sign_test.n_plus,
            "n_minus": report.sign_test.n_minus,
            "n_tie": report.sign_test.n_tie,
            "p_two_sided": report.sign_test.p_two_sided,
            "log10_p": report.sign_test.log10_p,
        },
        "confusion": [list(row) for row in report.confusion.counts],
        "partition": {
            "easy_ids": list(report.partition.easy_ids),
            "hard_ids": list(report.partition.hard_ids),
            "per_label_breakdown": {label.name.lower(): list(breakdown[label])
                                    for label in breakdown},
        },
        "stats": {
            "premise_mean_tokens": report.stats.premise_mean_tokens,
            "hypothesis_mean_tokens": report.stats.hypothesis_mean_tokens,
            "vocab_size_train": report.stats.vocab_size_train,
            "vocab_size_test": report.stats.vocab_size_test,
            "oov_ratio_test": report.stats.oov_ratio_test,
            "oov_ratio_test_type": report.stats.oov_ratio_test_type,
        },
    }
    return json.dumps(doc, indent=2)


def report_from_json(text: str) -> AuditReport:
    doc = json.loads(text)
    if doc.get("schema_version") != REPORT_SCHEMA_VERSION:
        raise ValueError(f"unsupported report schema: {doc.get('schema_version')!r}")
    sign = doc["sign_test"]
    part = doc["partition"]
    stats = doc["stats"]
    breakdown = {Label.parse(name): (easy_n, hard_n)
                 for name, (easy_n, hard_n) in part["per_label_breakdown"].items()}
    return AuditReport(
        corpus_id=doc["corpus_id"],
        alpha=doc["alpha"],
        significance=doc["significance"],
        nb_accuracy=doc["nb_accuracy"],
        baseline_accuracy=doc["baseline_accuracy"],
        sign_test=SignTestResult(n_plus=sign["n_plus"], n_minus=sign["n_minus"],
                                 n_tie=sign["n_tie"], p_two_sided=sign["p_two_sided"],
                                 log10_p=sign["log10_p"]),
        confusion=ConfusionMatrix(counts=tuple(tuple(row) for row in doc["confusion"])),
        partition=PartitionManifest(easy_ids=tuple(part["easy_ids"]),
                                    hard_ids=tuple(part["hard_ids"]),
                                    per_label_breakdown=breakdown),
        stats=DescriptiveStats(**stats),
    )


def render_text(report: AuditReport) -> str:
    """Human-readable report: accuracies, sign test, confusion, partition, stats."""
    lines = [
        f"Audit report: {report.corpus_id}",
        "",
        "Accuracy",
        f"  label prediction model : {report.nb_accuracy:.1%}",
        f"  majority baseline      : {report.baseline_accuracy:.1%}",
        "",
        "Sign test (two-sided, exact)",
        f"  n+ / n- / ties : {report.sign_test.n_plus} / {report.sign_test.n_minus}"
        f" / {report.sign_test.n_tie}",
        f"  p              : {report.sign_test.p_two_sided:.3g}"
        f"  (log10 p = {report.sign_test.log10_p:.1f})",
        "",
        "Confusion matrix (rows predicted, columns gold)",
        "               " + "".join(f"{label.display:>15}" for label in LABELS),
    ]
    for label in LABELS:
        row = report.confusion.counts[label]
        lines.append(f"  {label.display:<13}" + "".join(f"{n:>15,}" for n in row))
    easy, hard = report.partition.easy_count, report.partition.hard_count
    total = easy + hard
    lines += [
        "",
        "Easy/hard partition",
        f"  easy : {easy:,} ({easy / total:.1%})" if total else "  easy : 0",
        f"  hard : {hard:,} ({hard / total:.1%})" if total else "  hard : 0",
    ]
    if report.partition.per_label_breakdown:
        for label, (easy_n, hard_n) in report.partition.per_label_breakdown.items():
            lines.append(f"    {label.display:<13} easy {easy_n:>8,}   hard {hard_n:>8,}")
    stats = report.stats
    lines += [
        "",
        "Descriptive statistics",
        f"  premise mean tokens    : {stats.premise_mean_tokens:.1f}",
        f"  hypothesis mean tokens : {stats.hypothesis_mean_tokens:.1f}",
        f"  train vocab size       : {stats.vocab_size_train:,}",
        f"  test vocab size        : {stats.vocab_size_test:,}",
        f"  test OOV ratio (token) : {stats.oov_ratio_test:.2%}",
        f"  test OOV ratio (type)  : {stats.oov_ratio_test_type:.2%}",
        "",
        f"Verdict: {report.verdict}",
    ]
    return "\n".join(lines) + "\n"
