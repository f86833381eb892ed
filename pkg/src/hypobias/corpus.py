"""Corpus data model and loaders for textual entailment datasets.

Supported input formats:
  - SNLI-style JSONL (one JSON object per line; keys gold_label, sentence1,
    sentence2, pairID)
  - the single tab-separated SICK distribution file
  - a generic JSONL adapter (keys id, premise, hypothesis, label)
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from enum import IntEnum
from pathlib import Path
from typing import Iterable, Iterator


class CorpusError(ValueError):
    """Malformed or inconsistent corpus input."""


class Label(IntEnum):
    ENTAILMENT = 0
    NEUTRAL = 1
    CONTRADICTION = 2

    @classmethod
    def parse(cls, value: str) -> "Label":
        try:
            return _LABEL_BY_NAME[value.strip().lower()]
        except KeyError:
            raise CorpusError(f"not an entailment label: {value!r}") from None

    @property
    def display(self) -> str:
        return self.name.capitalize()


_LABEL_BY_NAME = {
    "entailment": Label.ENTAILMENT,
    "neutral": Label.NEUTRAL,
    "contradiction": Label.CONTRADICTION,
}

LABELS: tuple[Label, Label, Label] = (Label.ENTAILMENT, Label.NEUTRAL, Label.CONTRADICTION)

# gold_label values an SNLI file may legally contain; "-" marks no annotator
# consensus and the pair is dropped at load time.
SNLI_GOLD_LABELS = frozenset({"entailment", "neutral", "contradiction", "-"})

SPLIT_NAMES = ("train", "dev", "test")


@dataclass(frozen=True)
class SentencePair:
    id: str
    premise: str
    hypothesis: str
    label: Label


@dataclass(frozen=True)
class CorpusSplit:
    name: str
    pairs: tuple[SentencePair, ...]

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self) -> Iterator[SentencePair]:
        return iter(self.pairs)

    def label_counts(self) -> dict[Label, int]:
        counts = {label: 0 for label in LABELS}
        for pair in self.pairs:
            counts[pair.label] += 1
        return counts


@dataclass(frozen=True)
class Corpus:
    train: CorpusSplit
    dev: CorpusSplit
    test: CorpusSplit
    source_format: str

    def split(self, name: str) -> CorpusSplit:
        if name not in SPLIT_NAMES:
            raise ValueError(f"unknown split name: {name!r}")
        return getattr(self, name)


@dataclass(frozen=True)
class LoadResult:
    """A loaded split plus the number of no-consensus records dropped."""

    split: CorpusSplit
    excluded: int


def _make_pair(pair_id: str, premise: str, hypothesis: str, label: Label,
               where: str) -> SentencePair:
    if not premise.strip():
        raise CorpusError(f"{where}: empty premise")
    if not hypothesis.strip():
        raise CorpusError(f"{where}: empty hypothesis")
    return SentencePair(id=pair_id, premise=premise, hypothesis=hypothesis, label=label)


def _check_unique_ids(pairs: Iterable[SentencePair], source: str) -> None:
    seen: set[str] = set()
    for pair in pairs:
        if pair.id in seen:
            raise CorpusError(f"{source}: duplicate pair id {pair.id!r}")
        seen.add(pair.id)


def _read_text_lines(path: Path) -> list[str]:
    try:
        text = path.read_text(encoding="utf-8", errors="strict")
    except UnicodeDecodeError as exc:
        raise CorpusError(f"{path}: not valid UTF-8: {exc}") from exc
    return text.splitlines()


def load_snli(path: str | Path, split_name: str) -> LoadResult:
    """Load one SNLI JSONL split, dropping pairs without annotator consensus."""
    path = Path(path)
    if split_name not in SPLIT_NAMES:
        raise ValueError(f"unknown split name: {split_name!r}")
    pairs: list[SentencePair] = []
    excluded = 0
    for lineno, line in enumerate(_read_text_lines(path), start=1):
        if not line.strip():
            continue
        where = f"{path}:{lineno}"
        try:
            record = json.loads(line)
        except json.JSONDecodeError as exc:
            raise CorpusError(f"{where}: malformed JSON: {exc}") from exc
        if not isinstance(record, dict):
            raise CorpusError(f"{where}: expected a JSON object")
        for key in ("gold_label", "sentence1", "sentence2", "pairID"):
            if not isinstance(record.get(key), str):
                raise CorpusError(f"{where}: missing string field {key!r}")
        gold = record["gold_label"]
        if gold not in SNLI_GOLD_LABELS:
            raise CorpusError(f"{where}: unknown gold_label {gold!r}")
        if gold == "-":
            excluded += 1
            continue
        pairs.append(_make_pair(record["pairID"], record["sentence1"],
                                record["sentence2"], Label.parse(gold), where))
    _check_unique_ids(pairs, str(path))
    return LoadResult(split=CorpusSplit(name=split_name, pairs=tuple(pairs)),
                      excluded=excluded)


_SICK_COLUMNS = ("pair_ID", "sentence_A", "sentence_B", "entailment_label", "SemEval_set")
_SICK_SPLIT_OF = {"TRAIN": "train", "TRIAL": "dev", "TEST": "test"}


def load_sick(path: str | Path) -> Corpus:
    """Load the single tab-separated SICK file, routing rows by SemEval_set."""
    path = Path(path)
    lines = _read_text_lines(path)
    reader = csv.DictReader(lines, delimiter="\t")
    header = reader.fieldnames or []
    for column in _SICK_COLUMNS:
        if column not in header:
            raise CorpusError(f"{path}: missing required column {column!r}")
    buckets: dict[str, list[SentencePair]] = {name: [] for name in SPLIT_NAMES}
    for rowno, row in enumerate(reader, start=2):
        where = f"{path}:{rowno}"
        semeval_set = (row["SemEval_set"] or "").strip()
        if semeval_set not in _SICK_SPLIT_OF:
            raise CorpusError(f"{where}: unknown SemEval_set value {semeval_set!r}")
        label = Label.parse(row["entailment_label"] or "")
        buckets[_SICK_SPLIT_OF[semeval_set]].append(
            _make_pair(row["pair_ID"], row["sentence_A"], row["sentence_B"], label, where))
    splits = {}
    for name in SPLIT_NAMES:
        _check_unique_ids(buckets[name], f"{path} [{name}]")
        splits[name] = CorpusSplit(name=name, pairs=tuple(buckets[name]))
    return Corpus(train=splits["train"], dev=splits["dev"], test=splits["test"],
                  source_format="sick-tsv")


def load_generic_jsonl(path: str | Path, split_name: str) -> CorpusSplit:
    """Load a generic JSONL split (keys id, premise, hypothesis, label)."""
    path = Path(path)
    if split_name not in SPLIT_NAMES:
        raise ValueError(f"unknown split name: {split_name!r}")
    pairs: list[SentencePair] = []
    for lineno, line in enumerate(_read_text_lines(path), start=1):
        if not line.strip():
            continue
        where = f"{path}:{lineno}"
        try:
            record = json.loads(line)
        except json.JSONDecodeError as exc:
            raise CorpusError(f"{where}: malformed JSON: {exc}") from exc
        if not isinstance(record, dict):
            raise CorpusError(f"{where}: expected a JSON object")
        for key in ("id", "premise", "hypothesis", "label"):
            if not isinstance(record.get(key), str):
                raise CorpusError(f"{where}: missing string field {key!r}")
        pairs.append(_make_pair(record["id"], record["premise"], record["hypothesis"],
                                Label.parse(record["label"]), where))
    _check_unique_ids(pairs, str(path))
    return CorpusSplit(name=split_name, pairs=tuple(pairs))


def write_generic_jsonl(split: CorpusSplit, path: str | Path) -> None:
    path = Path(path)
    with path.open("w", encoding="utf-8") as handle:
        for pair in split.pairs:
            record = {"id": pair.id, "premise": pair.premise,
                      "hypothesis": pair.hypothesis, "label": pair.label.name.lower()}
            handle.write(json.dumps(record, ensure_ascii=False) + "\n")


def empty_split(name: str) -> CorpusSplit:
    return CorpusSplit(name=name, pairs=())


# Reference per-split label counts of the two published corpora, used by
# validate_counts (all no-consensus pairs already excluded).
SNLI_REFERENCE_COUNTS: dict[str, dict[Label, int]] = {
    "train": {Label.ENTAILMENT: 183_416, Label.NEUTRAL: 182_764, Label.CONTRADICTION: 183_187},
    "dev": {Label.ENTAILMENT: 3_329, Label.NEUTRAL: 3_235, Label.CONTRADICTION: 3_278},
    "test": {Label.ENTAILMENT: 3_368, Label.NEUTRAL: 3_219, Label.CONTRADICTION: 3_237},
}

SICK_REFERENCE_COUNTS: dict[str, dict[Label, int]] = {
    "train": {Label.ENTAILMENT: 1_299, Label.NEUTRAL: 2_536, Label.CONTRADICTION: 665},
    "dev": {Label.ENTAILMENT: 144, Label.NEUTRAL: 282, Label.CONTRADICTION: 74},
    "test": {Label.ENTAILMENT: 1_414, Label.NEUTRAL: 2_793, Label.CONTRADICTION: 720},
}

REFERENCE_COUNTS = {"snli": SNLI_REFERENCE_COUNTS, "sick": SICK_REFERENCE_COUNTS}


@dataclass(frozen=True)
class ValidationCell:
    split: str
    label: Label
    expected: int
    observed: int

    @property
    def passed(self) -> bool:
        return self.expected == self.observed


@dataclass(frozen=True)
class ValidationReport:
    cells: tuple[ValidationCell, ...]

    @property
    def all_passed(self) -> bool:
        return all(cell.passed for cell in self.cells)


def validate_counts(corpus: Corpus,
                    expected: dict[str, dict[Label, int]]) -> ValidationReport:
    """Compare per-split per-label counts against a reference table."""
    cells = []
    for split_name, expected_counts in expected.items():
        observed_counts = corpus.split(split_name).label_counts()
        for label in LABELS:
            cells.append(ValidationCell(split=split_name, label=label,
                                        expected=expected_counts[label],
                                        observed=observed_counts[label]))
    return ValidationReport(cells=tuple(cells))
