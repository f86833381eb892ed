"""Orchestration shared by the service endpoints and the CLI."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .corpus import (Corpus, CorpusError, CorpusSplit, REFERENCE_COUNTS,
                     ValidationReport, empty_split, load_generic_jsonl, load_sick,
                     load_snli, validate_counts, write_generic_jsonl)
from .nb import train_baseline, train_nb, predict_split
from .partition import (DEFAULT_UNK_SYMBOL, PartitionManifest, mask_premises,
                        partition_easy_hard, write_manifest)
from .report import (AuditReport, DEFAULT_SIGNIFICANCE, confusion, cross_corpus_oov,
                     descriptive_stats, render_text, report_to_json)
from .stattest import sign_test

REPORT_JSON = "report.json"
REPORT_TEXT = "report.txt"
PARTITION_FILE = "partition.txt"
MASKED_FILE = "masked.jsonl"

CORPUS_FORMATS = ("snli", "sick", "generic")


@dataclass(frozen=True)
class CorpusPaths:
    format: str                  # one of CORPUS_FORMATS
    train: str | None = None
    dev: str | None = None
    test: str | None = None
    file: str | None = None      # single-file SICK distribution

    def validate(self) -> None:
        if self.format not in CORPUS_FORMATS:
            raise ValueError(f"unknown corpus format: {self.format!r}")
        if self.format == "sick":
            if not self.file:
                raise ValueError("sick format requires the single-file path")
            required = [self.file]
        else:
            required = [p for p in (self.train, self.dev, self.test) if p]
            if not required:
                raise ValueError(f"{self.format} format requires at least one split path")
        for path in required:
            if not Path(path).is_file():
                raise CorpusError(f"no such file: {path}")


def load_corpus(paths: CorpusPaths) -> Corpus:
    paths.validate()
    if paths.format == "sick":
        return load_sick(paths.file)
    loader = (lambda p, name: load_snli(p, name).split) if paths.format == "snli" \
        else load_generic_jsonl
    splits = {}
    for name, path in (("train", paths.train), ("dev", paths.dev), ("test", paths.test)):
        splits[name] = loader(path, name) if path else empty_split(name)
    source = "snli-jsonl" if paths.format == "snli" else "generic-jsonl"
    return Corpus(train=splits["train"], dev=splits["dev"], test=splits["test"],
                  source_format=source)


def run_audit(paths: CorpusPaths, alpha: float = 1.0,
              significance: float = DEFAULT_SIGNIFICANCE,
              corpus_id: str | None = None) -> AuditReport:
    """Train on train hypotheses, evaluate on test, sign-test against the baseline."""
    corpus = load_corpus(paths)
    if not corpus.train.pairs:
        raise CorpusError("audit requires a non-empty training split")
    if not corpus.test.pairs:
        raise CorpusError("audit requires a non-empty test split")
    model = train_nb(corpus.train, alpha=alpha)
    baseline = train_baseline(corpus.train)
    gold = [pair.label for pair in corpus.test.pairs]
    nb_predictions = predict_split(model, corpus.test)
    baseline_predictions = [baseline.majority] * len(gold)
    nb_correct = [p == g for p, g in zip(nb_predictions, gold)]
    baseline_correct = [p == g for p, g in zip(baseline_predictions, gold)]
    manifest = partition_easy_hard(model, corpus.test)
    return AuditReport(
        corpus_id=corpus_id or paths.format,
        alpha=alpha,
        significance=significance,
        nb_accuracy=sum(nb_correct) / len(gold),
        baseline_accuracy=sum(baseline_correct) / len(gold),
        sign_test=sign_test(nb_correct, baseline_correct),
        confusion=confusion(nb_predictions, gold),
        partition=manifest,
        stats=descriptive_stats(corpus),
    )


def write_audit_outputs(report: AuditReport, out_dir: str | Path) -> dict[str, str]:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    files = {
        "report_json": out / REPORT_JSON,
        "report_text": out / REPORT_TEXT,
        "partition": out / PARTITION_FILE,
    }
    files["report_json"].write_text(report_to_json(report), encoding="utf-8")
    files["report_text"].write_text(render_text(report), encoding="utf-8")
    write_manifest(report.partition, files["partition"])
    return {key: str(path) for key, path in files.items()}


def run_partition(paths: CorpusPaths, alpha: float = 1.0) -> PartitionManifest:
    corpus = load_corpus(paths)
    if not corpus.train.pairs or not corpus.test.pairs:
        raise CorpusError("partition requires non-empty train and test splits")
    model = train_nb(corpus.train, alpha=alpha)
    return partition_easy_hard(model, corpus.test)


def run_mask(paths: CorpusPaths, split_name: str, out_path: str | Path,
             unk_symbol: str = DEFAULT_UNK_SYMBOL) -> CorpusSplit:
    corpus = load_corpus(paths)
    masked = mask_premises(corpus.split(split_name), unk_symbol)
    out_path = Path(out_path)
    out_path.parent.mkdir(parents=True, exist_ok=True)
    write_generic_jsonl(masked, out_path)
    return masked


@dataclass(frozen=True)
class StatsResult:
    label_counts: dict[str, dict[str, int]]
    stats: "object"              # DescriptiveStats
    cross_corpus_oov: float | None


def run_stats(paths: CorpusPaths, reference_train: str | None = None) -> StatsResult:
    corpus = load_corpus(paths)
    counts = {name: {label.name.lower(): n
                     for label, n in corpus.split(name).label_counts().items()}
              for name in ("train", "dev", "test")}
    oov = None
    if reference_train:
        if not Path(reference_train).is_file():
            raise CorpusError(f"no such file: {reference_train}")
        reference = load_generic_jsonl(reference_train, "train")
        oov = cross_corpus_oov(corpus.test, reference)
    return StatsResult(label_counts=counts, stats=descriptive_stats(corpus),
                       cross_corpus_oov=oov)


def run_validate(paths: CorpusPaths, reference: str | None = None) -> ValidationReport:
    corpus = load_corpus(paths)
    key = reference or paths.format
    if key not in REFERENCE_COUNTS:
        raise ValueError(f"no bundled reference table for {key!r}; "
                         f"known: {', '.join(REFERENCE_COUNTS)}")
    return validate_counts(corpus, REFERENCE_COUNTS[key])
