"""Pydantic request/response models for the audit service."""

from __future__ import annotations

from pydantic import BaseModel, Field


class CorpusSource(BaseModel):
    format: str = Field(description="one of snli, sick, generic")
    train: str | None = None
    dev: str | None = None
    test: str | None = None
    file: str | None = None


class AuditRequest(BaseModel):
    corpus: CorpusSource
    alpha: float = 1.0
    significance: float = 0.01
    out_dir: str | None = None
    corpus_id: str | None = None


class SignTestBody(BaseModel):
    n_plus: int
    n_minus: int
    n_tie: int
    p_two_sided: float
    log10_p: float


class StatsBody(BaseModel):
    premise_mean_tokens: float
    hypothesis_mean_tokens: float
    vocab_size_train: int
    vocab_size_test: int
    oov_ratio_test: float
    oov_ratio_test_type: float


class AuditResponse(BaseModel):
    corpus_id: str
    verdict: str
    nb_accuracy: float
    baseline_accuracy: float
    sign_test: SignTestBody
    confusion: list[list[int]]
    easy_count: int
    hard_count: int
    per_label_breakdown: dict[str, list[int]]
    stats: StatsBody
    report_text: str
    output_files: dict[str, str]


class PartitionRequest(BaseModel):
    corpus: CorpusSource
    alpha: float = 1.0
    out_path: str | None = None


class PartitionResponse(BaseModel):
    easy_ids: list[str]
    hard_ids: list[str]
    per_label_breakdown: dict[str, list[int]]
    out_path: str | None


class MaskRequest(BaseModel):
    corpus: CorpusSource
    split: str = "test"
    unk_symbol: str = "<unk>"
    out_path: str


class MaskResponse(BaseModel):
    out_path: str
    pair_count: int


class StatsRequest(BaseModel):
    corpus: CorpusSource
    reference_train: str | None = None


class StatsResponse(BaseModel):
    label_counts: dict[str, dict[str, int]]
    stats: StatsBody
    cross_corpus_oov: float | None


class ValidateRequest(BaseModel):
    corpus: CorpusSource
    reference: str | None = None


class ValidationCellBody(BaseModel):
    split: str
    label: str
    expected: int
    observed: int
    passed: bool


class ValidateResponse(BaseModel):
    all_passed: bool
    cells: list[ValidationCellBody]
