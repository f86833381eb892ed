"""FastAPI service exposing the audit pipeline.

Paths in request bodies are resolved on the host running the service; the CLI
mounts this app in-process by default, so they are ordinary local paths there.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..corpus import CorpusError
from ..partition import write_manifest
from ..pipeline import (CorpusPaths, run_audit, run_mask, run_partition,
                        run_stats, run_validate, write_audit_outputs)
from ..report import render_text
from . import schemas

app = FastAPI(title="hypobias", version=__version__)


@app.exception_handler(CorpusError)
async def corpus_error_handler(request: Request, exc: CorpusError) -> JSONResponse:
    return JSONResponse(status_code=422, content={"detail": str(exc)})


@app.exception_handler(ValueError)
async def value_error_handler(request: Request, exc: ValueError) -> JSONResponse:
    return JSONResponse(status_code=400, content={"detail": str(exc)})


def _paths(source: schemas.CorpusSource) -> CorpusPaths:
    return CorpusPaths(format=source.format, train=source.train, dev=source.dev,
                       test=source.test, file=source.file)


def _breakdown(manifest) -> dict[str, list[int]]:
    breakdown = manifest.per_label_breakdown or {}
    return {label.name.lower(): list(pair) for label, pair in breakdown.items()}


@app.get("/health")
def health() -> dict:
    return {"status": "ok", "version": __version__}


@app.post("/audit", response_model=schemas.AuditResponse)
def audit(request: schemas.AuditRequest) -> schemas.AuditResponse:
    report = run_audit(_paths(request.corpus), alpha=request.alpha,
                       significance=request.significance, corpus_id=request.corpus_id)
    output_files = {}
    if request.out_dir:
        output_files = write_audit_outputs(report, request.out_dir)
    sign = report.sign_test
    return schemas.AuditResponse(
        corpus_id=report.corpus_id,
        verdict=report.verdict,
        nb_accuracy=report.nb_accuracy,
        baseline_accuracy=report.baseline_accuracy,
        sign_test=schemas.SignTestBody(n_plus=sign.n_plus, n_minus=sign.n_minus,
                                       n_tie=sign.n_tie, p_two_sided=sign.p_two_sided,
                                       log10_p=sign.log10_p),
        confusion=[list(row) for row in report.confusion.counts],
        easy_count=report.partition.easy_count,
        hard_count=report.partition.hard_count,
        per_label_breakdown=_breakdown(report.partition),
        stats=schemas.StatsBody(**report.stats.__dict__),
        report_text=render_text(report),
        output_files=output_files,
    )


@app.post("/partition", response_model=schemas.PartitionResponse)
def partition(request: schemas.PartitionRequest) -> schemas.PartitionResponse:
    manifest = run_partition(_paths(request.corpus), alpha=request.alpha)
    if request.out_path:
        write_manifest(manifest, request.out_path)
    return schemas.PartitionResponse(
        easy_ids=list(manifest.easy_ids),
        hard_ids=list(manifest.hard_ids),
        per_label_breakdown=_breakdown(manifest),
        out_path=request.out_path,
    )


@app.post("/mask", response_model=schemas.MaskResponse)
def mask(request: schemas.MaskRequest) -> schemas.MaskResponse:
    masked = run_mask(_paths(request.corpus), request.split, request.out_path,
                      unk_symbol=request.unk_symbol)
    return schemas.MaskResponse(out_path=request.out_path, pair_count=len(masked))


@app.post("/stats", response_model=schemas.StatsResponse)
def stats(request: schemas.StatsRequest) -> schemas.StatsResponse:
    result = run_stats(_paths(request.corpus), reference_train=request.reference_train)
    return schemas.StatsResponse(
        label_counts=result.label_counts,
        stats=schemas.StatsBody(**result.stats.__dict__),
        cross_corpus_oov=result.cross_corpus_oov,
    )


@app.post("/validate", response_model=schemas.ValidateResponse)
def validate(request: schemas.ValidateRequest) -> schemas.ValidateResponse:
    report = run_validate(_paths(request.corpus), reference=request.reference)
    return schemas.ValidateResponse(
        all_passed=report.all_passed,
        cells=[schemas.ValidationCellBody(split=cell.split,
                                          label=cell.label.name.lower(),
                                          expected=cell.expected,
                                          observed=cell.observed,
                                          passed=cell.passed)
               for cell in report.cells],
    )
