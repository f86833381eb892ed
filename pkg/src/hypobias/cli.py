"""Command-line client for the audit service.

By default the service app is mounted in-process (no server required); pass
--server to talk to a running instance instead.
"""

from __future__ import annotations

import sys

import click
import httpx

from .corpus import LABELS
from .pipeline import MASKED_FILE, PARTITION_FILE

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2


def _client(server: str | None) -> httpx.Client:
    if server:
        return httpx.Client(base_url=server, timeout=600.0)
    # no server: mount the service app in-process
    from fastapi.testclient import TestClient
    from .service.app import app
    return TestClient(app, raise_server_exceptions=False)


def _post(server: str | None, endpoint: str, payload: dict) -> dict:
    with _client(server) as client:
        response = client.post(endpoint, json=payload)
    if response.status_code != 200:
        try:
            detail = response.json().get("detail", response.text)
        except ValueError:
            detail = response.text
        click.echo(f"error: {detail}", err=True)
        sys.exit(EXIT_DATA)
    return response.json()


def _corpus_source(format: str, train: str | None, dev: str | None,
                   test: str | None, file: str | None) -> dict:
    if format == "sick":
        if not file:
            raise click.UsageError("--file is required for --format sick")
        if train or dev or test:
            raise click.UsageError("--train/--dev/--test do not apply to --format sick")
    elif file:
        raise click.UsageError("--file applies only to --format sick")
    return {"format": format, "train": train, "dev": dev, "test": test, "file": file}


def corpus_options(command):
    for option in reversed([
        click.option("--format", "format_", type=click.Choice(["snli", "sick", "generic"]),
                     required=True, help="corpus input format"),
        click.option("--train", type=str, default=None, help="training split path"),
        click.option("--dev", type=str, default=None, help="development split path"),
        click.option("--test", type=str, default=None, help="test split path"),
        click.option("--file", type=str, default=None, help="single-file SICK path"),
    ]):
        command = option(command)
    return command


@click.group()
@click.option("--server", type=str, default=None,
              help="base URL of a running service; defaults to in-process")
@click.pass_context
def cli(ctx: click.Context, server: str | None) -> None:
    """Audit textual entailment corpora for hypothesis-only label bias."""
    ctx.obj = server


@cli.command()
@corpus_options
@click.option("--alpha", type=float, default=1.0, show_default=True,
              help="additive smoothing strength")
@click.option("--alpha-level", type=float, default=0.01, show_default=True,
              help="significance level for the verdict")
@click.option("--out", type=str, default="out", show_default=True,
              help="output directory (report.json, report.txt, partition.txt)")
@click.option("--corpus-id", type=str, default=None, help="identifier used in the report")
@click.pass_obj
def audit(server, format_, train, dev, test, file, alpha, alpha_level, out, corpus_id):
    """Train the label prediction model and test the corpus for hidden bias."""
    body = _post(server, "/audit", {
        "corpus": _corpus_source(format_, train, dev, test, file),
        "alpha": alpha,
        "significance": alpha_level,
        "out_dir": out,
        "corpus_id": corpus_id or format_,
    })
    click.echo(body["report_text"], nl=False)
    for name, path in body["output_files"].items():
        click.echo(f"wrote {path}")


@cli.command()
@corpus_options
@click.option("--alpha", type=float, default=1.0, show_default=True)
@click.option("--out", type=str, default="out", show_default=True,
              help="output directory (partition.txt)")
@click.pass_obj
def partition(server, format_, train, dev, test, file, alpha, out):
    """Split the test set into empirically easy and hard subsets."""
    import pathlib
    out_dir = pathlib.Path(out)
    out_dir.mkdir(parents=True, exist_ok=True)
    out_path = str(out_dir / PARTITION_FILE)
    body = _post(server, "/partition", {
        "corpus": _corpus_source(format_, train, dev, test, file),
        "alpha": alpha,
        "out_path": out_path,
    })
    easy, hard = len(body["easy_ids"]), len(body["hard_ids"])
    total = easy + hard
    click.echo(f"easy {easy:,} ({easy / total:.1%})  hard {hard:,} ({hard / total:.1%})"
               if total else "empty test split")
    click.echo(f"wrote {out_path}")


@cli.command()
@corpus_options
@click.option("--split", type=click.Choice(["train", "dev", "test"]), default="test",
              show_default=True, help="which split to mask")
@click.option("--unk-symbol", type=str, default="<unk>", show_default=True)
@click.option("--out", type=str, default="out", show_default=True,
              help="output directory (masked.jsonl)")
@click.pass_obj
def mask(server, format_, train, dev, test, file, split, unk_symbol, out):
    """Replace all premise words with the unknown symbol."""
    import pathlib
    out_dir = pathlib.Path(out)
    out_dir.mkdir(parents=True, exist_ok=True)
    out_path = str(out_dir / MASKED_FILE)
    body = _post(server, "/mask", {
        "corpus": _corpus_source(format_, train, dev, test, file),
        "split": split,
        "unk_symbol": unk_symbol,
        "out_path": out_path,
    })
    click.echo(f"wrote {body['out_path']} ({body['pair_count']:,} pairs)")


@cli.command()
@corpus_options
@click.option("--reference-train", type=str, default=None,
              help="generic-jsonl train split for cross-corpus OOV")
@click.pass_obj
def stats(server, format_, train, dev, test, file, reference_train):
    """Label distributions and descriptive statistics."""
    body = _post(server, "/stats", {
        "corpus": _corpus_source(format_, train, dev, test, file),
        "reference_train": reference_train,
    })
    click.echo("Label counts")
    for split_name, counts in body["label_counts"].items():
        cells = "  ".join(f"{label.display} {counts[label.name.lower()]:,}"
                          for label in LABELS)
        click.echo(f"  {split_name:<6} {cells}")
    st = body["stats"]
    click.echo("Descriptive statistics")
    click.echo(f"  premise mean tokens    : {st['premise_mean_tokens']:.1f}")
    click.echo(f"  hypothesis mean tokens : {st['hypothesis_mean_tokens']:.1f}")
    click.echo(f"  train vocab size       : {st['vocab_size_train']:,}")
    click.echo(f"  test vocab size        : {st['vocab_size_test']:,}")
    click.echo(f"  test OOV ratio (token) : {st['oov_ratio_test']:.2%}")
    click.echo(f"  test OOV ratio (type)  : {st['oov_ratio_test_type']:.2%}")
    if body["cross_corpus_oov"] is not None:
        click.echo(f"  cross-corpus OOV       : {body['cross_corpus_oov']:.2%}")


@cli.command()
@corpus_options
@click.option("--reference", type=click.Choice(["snli", "sick"]), default=None,
              help="bundled reference table; defaults to --format")
@click.pass_obj
def validate(server, format_, train, dev, test, file, reference):
    """Check split label counts against the published reference tables."""
    body = _post(server, "/validate", {
        "corpus": _corpus_source(format_, train, dev, test, file),
        "reference": reference,
    })
    for cell in body["cells"]:
        status = "ok  " if cell["passed"] else "FAIL"
        click.echo(f"  {status} {cell['split']:<6} {cell['label']:<13} "
                   f"expected {cell['expected']:>9,} observed {cell['observed']:>9,}")
    click.echo("all counts match" if body["all_passed"] else "count mismatches found")


def main() -> None:
    try:
        cli(standalone_mode=False)
    except click.ClickException as exc:
        exc.show()
        sys.exit(EXIT_USAGE)
    except click.Abort:
        sys.exit(EXIT_USAGE)


if __name__ == "__main__":
    main()
