"""Hypothesis-only bias auditing for textual entailment corpora."""

from .corpus import (Corpus, CorpusError, CorpusSplit, Label, LABELS, SentencePair,
                     load_generic_jsonl, load_sick, load_snli, validate_counts)
from .features import Vocabulary, build_vocab, featurize, tokenize
from .nb import BaselineModel, NbModel, predict, predict_baseline, train_baseline, train_nb
from .partition import PartitionManifest, mask_premises, partition_easy_hard
from .report import AuditReport, ConfusionMatrix, DescriptiveStats, confusion, \
    cross_corpus_oov, descriptive_stats
from .stattest import SignTestResult, log_binom_cdf, sign_test

__version__ = "0.1.0"
