"""Shared fixtures: in-memory corpora, on-disk corpus writers, synthetic datasets."""

from __future__ import annotations

import json
import os
import random
from pathlib import Path

import pytest

from hypobias.corpus import Corpus, CorpusSplit, Label, SentencePair, empty_split


def make_pair(pair_id: str, premise: str, hypothesis: str, label: Label) -> SentencePair:
    return SentencePair(id=pair_id, premise=premise, hypothesis=hypothesis, label=label)


def make_split(name: str, rows: list[tuple[str, str, Label]]) -> CorpusSplit:
    pairs = tuple(make_pair(f"{name}-{i}", premise, hypothesis, label)
                  for i, (premise, hypothesis, label) in enumerate(rows))
    return CorpusSplit(name=name, pairs=pairs)


def write_snli_jsonl(path: Path, records: list[dict]) -> None:
    with path.open("w", encoding="utf-8") as handle:
        for record in records:
            handle.write(json.dumps(record) + "\n")


def snli_record(pair_id: str, premise: str, hypothesis: str, gold: str) -> dict:
    return {"pairID": pair_id, "sentence1": premise, "sentence2": hypothesis,
            "gold_label": gold, "annotator_labels": [gold], "captionID": "c"}


def write_generic_jsonl(path: Path, rows: list[tuple[str, str, str, str]]) -> None:
    with path.open("w", encoding="utf-8") as handle:
        for pair_id, premise, hypothesis, label in rows:
            handle.write(json.dumps({"id": pair_id, "premise": premise,
                                     "hypothesis": hypothesis, "label": label}) + "\n")


SICK_HEADER = ("pair_ID\tsentence_A\tsentence_B\trelatedness_score"
               "\tentailment_label\tSemEval_set\n")


def write_sick_tsv(path: Path, rows: list[tuple[str, str, str, str, str]]) -> None:
    with path.open("w", encoding="utf-8") as handle:
        handle.write(SICK_HEADER)
        for pair_id, sent_a, sent_b, label, semeval_set in rows:
            handle.write(f"{pair_id}\t{sent_a}\t{sent_b}\t4.5\t{label}\t{semeval_set}\n")


# Vocabulary pools for synthetic corpora.
_COMMON = ["a", "man", "woman", "dog", "park", "is", "in", "the", "running",
           "sitting", "outside", "ball", "red", "two", "people"]
_LABEL_MARKERS = {
    Label.ENTAILMENT: ["outdoors", "near", "person"],
    Label.NEUTRAL: ["winning", "first", "famous"],
    Label.CONTRADICTION: ["nobody", "empty", "sleeping"],
}


def synthetic_rows(n: int, seed: int, biased: bool,
                   label_weights: tuple[int, int, int] = (1, 1, 1)):
    """Premise/hypothesis/label rows; biased corpora leak the label into the hypothesis."""
    rng = random.Random(seed)
    labels = [Label.ENTAILMENT, Label.NEUTRAL, Label.CONTRADICTION]
    rows = []
    for i in range(n):
        label = labels[i % 3] if i < 3 else rng.choices(labels, weights=label_weights)[0]
        premise = " ".join(rng.choices(_COMMON, k=rng.randint(5, 9))).capitalize() + "."
        hyp_words = rng.choices(_COMMON, k=rng.randint(3, 6))
        if biased and rng.random() < 0.9:
            hyp_words.insert(rng.randrange(len(hyp_words) + 1),
                             rng.choice(_LABEL_MARKERS[label]))
        rows.append((premise, " ".join(hyp_words).capitalize() + ".", label))
    return rows


def synthetic_corpus(biased: bool, n_train: int = 300, n_test: int = 150,
                     seed: int = 7, label_weights=(1, 1, 1)) -> Corpus:
    train = make_split("train", synthetic_rows(n_train, seed, biased, label_weights))
    test = make_split("test", synthetic_rows(n_test, seed + 1, biased, label_weights))
    return Corpus(train=train, dev=empty_split("dev"), test=test,
                  source_format="generic-jsonl")


@pytest.fixture
def biased_corpus() -> Corpus:
    return synthetic_corpus(biased=True)


@pytest.fixture
def unbiased_corpus() -> Corpus:
    # Skewed labels so the majority baseline is strong and NB has nothing to exploit.
    return synthetic_corpus(biased=False, label_weights=(1, 4, 1))


def corpus_to_files(corpus: Corpus, directory: Path) -> dict[str, Path]:
    paths = {}
    for name in ("train", "dev", "test"):
        split = corpus.split(name)
        path = directory / f"{name}.jsonl"
        write_generic_jsonl(path, [(p.id, p.premise, p.hypothesis, p.label.name.lower())
                                   for p in split.pairs])
        paths[name] = path
    return paths


@pytest.fixture
def biased_corpus_files(biased_corpus, tmp_path) -> dict[str, Path]:
    return corpus_to_files(biased_corpus, tmp_path)


def official_data_dir() -> Path | None:
    """Directory with the official corpora, if the user supplied one."""
    root = os.environ.get("HYPOBIAS_DATA")
    if not root:
        return None
    path = Path(root)
    return path if path.is_dir() else None


requires_official_data = pytest.mark.skipif(
    official_data_dir() is None,
    reason="official corpora not available (set HYPOBIAS_DATA to a directory with "
           "snli_1.0_{train,dev,test}.jsonl and SICK.txt)")
