"""Acceptance suite.

The published-corpus checks need the official SNLI and SICK distributions and
look for them under $HYPOBIAS_DATA (snli_1.0_train.jsonl, snli_1.0_dev.jsonl,
snli_1.0_test.jsonl, SICK.txt, either flat or in snli_1.0/ and sick/
subdirectories). Without that directory they skip; everything else runs
unconditionally.
"""

import math
from pathlib import Path

import pytest

from hypobias.corpus import (Corpus, Label, LABELS, SICK_REFERENCE_COUNTS,
                             SNLI_REFERENCE_COUNTS, empty_split, load_sick, load_snli,
                             validate_counts)
from hypobias.features import build_vocab, featurize, tokenize
from hypobias.nb import predict, predict_split, train_baseline, train_nb
from hypobias.partition import mask_premises, partition_easy_hard, read_manifest, \
    write_manifest
from hypobias.report import confusion, cross_corpus_oov, descriptive_stats, \
    report_from_json, report_to_json
from hypobias.stattest import sign_test

from conftest import make_split, official_data_dir, requires_official_data
from test_nb import brute_force_scores
from test_report import sample_report
from test_stattest import rational_two_sided_p

E, N, C = Label.ENTAILMENT, Label.NEUTRAL, Label.CONTRADICTION


def _find(data_dir: Path, *candidates: str) -> Path:
    for candidate in candidates:
        path = data_dir / candidate
        if path.is_file():
            return path
    pytest.skip(f"none of {candidates} found under {data_dir}")


@pytest.fixture(scope="session")
def snli_corpus() -> Corpus:
    data_dir = official_data_dir()
    if data_dir is None:
        pytest.skip("official corpora not available")
    splits = {}
    for name in ("train", "dev", "test"):
        path = _find(data_dir, f"snli_1.0_{name}.jsonl", f"snli_1.0/snli_1.0_{name}.jsonl")
        splits[name] = load_snli(path, name).split
    return Corpus(train=splits["train"], dev=splits["dev"], test=splits["test"],
                  source_format="snli-jsonl")


@pytest.fixture(scope="session")
def sick_corpus() -> Corpus:
    data_dir = official_data_dir()
    if data_dir is None:
        pytest.skip("official corpora not available")
    return load_sick(_find(data_dir, "SICK.txt", "sick/SICK.txt"))


@pytest.fixture(scope="session")
def snli_model(snli_corpus):
    return train_nb(snli_corpus.train, alpha=1.0)


@pytest.fixture(scope="session")
def snli_eval(snli_corpus, snli_model):
    gold = [pair.label for pair in snli_corpus.test.pairs]
    predictions = predict_split(snli_model, snli_corpus.test)
    return gold, predictions


@pytest.fixture(scope="session")
def sick_model(sick_corpus):
    return train_nb(sick_corpus.train, alpha=1.0)


@pytest.fixture(scope="session")
def sick_eval(sick_corpus, sick_model):
    gold = [pair.label for pair in sick_corpus.test.pairs]
    predictions = predict_split(sick_model, sick_corpus.test)
    return gold, predictions


@requires_official_data
class TestCriterion1SnliValidation:
    def test_split_totals(self, snli_corpus):
        assert len(snli_corpus.train) == 549_367
        assert len(snli_corpus.dev) == 9_842
        assert len(snli_corpus.test) == 9_824

    def test_all_nine_label_cells_exact(self, snli_corpus):
        report = validate_counts(snli_corpus, SNLI_REFERENCE_COUNTS)
        failing = [cell for cell in report.cells if not cell.passed]
        assert not failing, failing


@requires_official_data
class TestCriterion2BaselineAccuracies:
    def test_snli_baseline_exact(self, snli_corpus):
        baseline = train_baseline(snli_corpus.train)
        correct = sum(pair.label == baseline.majority for pair in snli_corpus.test.pairs)
        assert baseline.majority == E
        assert (correct, len(snli_corpus.test)) == (3_368, 9_824)

    def test_sick_baseline_exact(self, sick_corpus):
        baseline = train_baseline(sick_corpus.train)
        correct = sum(pair.label == baseline.majority for pair in sick_corpus.test.pairs)
        assert baseline.majority == N
        assert (correct, len(sick_corpus.test)) == (2_793, 4_927)


@requires_official_data
class TestCriterion3NbAccuracy:
    def test_snli_nb_accuracy_in_band(self, snli_eval):
        gold, predictions = snli_eval
        accuracy = sum(p == g for p, g in zip(predictions, gold)) / len(gold)
        assert accuracy == pytest.approx(0.633, abs=0.020)

    def test_sick_nb_accuracy_near_baseline(self, sick_corpus, sick_eval):
        gold, predictions = sick_eval
        nb_accuracy = sum(p == g for p, g in zip(predictions, gold)) / len(gold)
        baseline_accuracy = 2_793 / 4_927
        assert abs(nb_accuracy - baseline_accuracy) <= 0.010


class TestCriterion4SignTest:
    @requires_official_data
    def test_snli_log10_p_below_minus_150(self, snli_corpus, snli_eval):
        gold, predictions = snli_eval
        baseline = train_baseline(snli_corpus.train)
        nb_correct = [p == g for p, g in zip(predictions, gold)]
        baseline_correct = [g == baseline.majority for g in gold]
        result = sign_test(nb_correct, baseline_correct)
        assert result.log10_p <= -150.0

    @requires_official_data
    def test_sick_p_above_threshold(self, sick_corpus, sick_eval):
        gold, predictions = sick_eval
        baseline = train_baseline(sick_corpus.train)
        nb_correct = [p == g for p, g in zip(predictions, gold)]
        baseline_correct = [g == baseline.majority for g in gold]
        result = sign_test(nb_correct, baseline_correct)
        assert result.p_two_sided >= 0.05

    def test_exact_kernel_matches_rational_oracle_up_to_30(self):
        for n in range(0, 31):
            for n_plus in range(n + 1):
                result = sign_test([True] * n_plus + [False] * (n - n_plus),
                                   [False] * n_plus + [True] * (n - n_plus))
                expected = rational_two_sided_p(n_plus, n - n_plus)
                assert abs(result.p_two_sided - float(expected)) <= 1e-12


@requires_official_data
class TestCriterion5Partition:
    def test_easy_ratio_in_band(self, snli_model, snli_corpus):
        manifest = partition_easy_hard(snli_model, snli_corpus.test)
        assert manifest.easy_ratio == pytest.approx(0.633, abs=0.020)

    def test_easy_per_label_counts_within_5_percent(self, snli_model, snli_corpus):
        manifest = partition_easy_hard(snli_model, snli_corpus.test)
        expected = {E: 2_275, N: 1_976, C: 1_968}
        for label, target in expected.items():
            easy_count = manifest.per_label_breakdown[label][0]
            assert abs(easy_count - target) <= 0.05 * target, (label, easy_count)


@requires_official_data
class TestCriterion6SickConfusion:
    def test_predictions_concentrate_on_neutral_row(self, sick_eval):
        gold, predictions = sick_eval
        matrix = confusion(predictions, gold)
        neutral_row = sum(matrix.counts[N])
        assert neutral_row / matrix.total >= 0.95

    def test_column_sums_equal_published_test_counts(self, sick_eval):
        gold, predictions = sick_eval
        matrix = confusion(predictions, gold)
        assert matrix.column_sums() == (1_414, 2_793, 720)


@requires_official_data
class TestCriterion7DescriptiveStats:
    def test_snli_token_means(self, snli_corpus):
        stats = descriptive_stats(snli_corpus)
        assert stats.premise_mean_tokens == pytest.approx(14.1, abs=0.5)
        assert stats.hypothesis_mean_tokens == pytest.approx(8.3, abs=0.5)

    def test_sick_token_means(self, sick_corpus):
        stats = descriptive_stats(sick_corpus)
        assert stats.premise_mean_tokens == pytest.approx(9.8, abs=0.5)
        assert stats.hypothesis_mean_tokens == pytest.approx(9.5, abs=0.5)

    def test_cross_corpus_oov_of_sick_test_vs_snli_train(self, sick_corpus, snli_corpus):
        ratio = cross_corpus_oov(sick_corpus.test, snli_corpus.train)
        assert ratio == pytest.approx(0.0015, abs=0.001)


class TestCriterion8PropertySuites:
    """Compact re-statement of the always-on property checks."""

    def test_nb_matches_rational_oracle_on_toy_corpora(self):
        split = make_split("train", [("P.", "a a b", E), ("P.", "b c", N),
                                     ("P.", "c c d", C), ("P.", "a d", E),
                                     ("P.", "e", N), ("P.", "b e", C)])
        vocab = build_vocab(split, fields=("hypothesis",))
        model = train_nb(split, vocab, alpha=1.0)
        for query in (["a"], ["b", "c"], ["e", "e", "a"], [], ["d", "c"]):
            predicted, _ = predict(model, featurize(query, vocab))
            scores = brute_force_scores(split, vocab, 1, query)
            assert scores[predicted] == max(scores.values())

    def test_nb_normalization_invariants(self):
        import numpy as np
        split = make_split("train", [("P.", "a b", E), ("P.", "b", N), ("P.", "c", C)])
        model = train_nb(split, alpha=1.0)
        assert abs(np.exp(model.class_log_prior).sum() - 1.0) < 1e-12
        assert np.allclose(np.exp(model.token_log_likelihood).sum(axis=1), 1.0,
                           atol=1e-9)

    def test_mask_idempotence(self):
        split = make_split("test", [("A man in a park.", "A person.", E),
                                    ("Two dogs!", "Animals.", N)])
        once = mask_premises(split)
        assert mask_premises(once) == once

    def test_manifest_round_trip(self, tmp_path):
        from hypobias.partition import PartitionManifest
        manifest = PartitionManifest(easy_ids=("a", "b", "c"), hard_ids=("d",))
        path = tmp_path / "partition.txt"
        write_manifest(manifest, path)
        assert read_manifest(path) == manifest

    def test_report_round_trip(self):
        report = sample_report()
        assert report_from_json(report_to_json(report)) == report
