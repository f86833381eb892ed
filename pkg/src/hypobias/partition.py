"""Empirical easy/hard partitioning and premise masking."""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from .corpus import CorpusSplit, Label, LABELS, SentencePair
from .features import tokenize
from .nb import NbModel, predict_text

DEFAULT_UNK_SYMBOL = "<unk>"


@dataclass(frozen=True)
class PartitionManifest:
    easy_ids: tuple[str, ...]
    hard_ids: tuple[str, ...]
    # Recomputable from the split; not part of the on-disk format, so not compared.
    per_label_breakdown: dict[Label, tuple[int, int]] | None = field(default=None,
                                                                     compare=False)

    @property
    def easy_count(self) -> int:
        return len(self.easy_ids)

    @property
    def hard_count(self) -> int:
        return len(self.hard_ids)

    @property
    def easy_ratio(self) -> float:
        total = self.easy_count + self.hard_count
        return self.easy_count / total if total else 0.0


def partition_easy_hard(model: NbModel, test: CorpusSplit) -> PartitionManifest:
    """Pairs whose hypothesis-only prediction matches gold go to the easy set."""
    easy: list[str] = []
    hard: list[str] = []
    breakdown = {label: [0, 0] for label in LABELS}
    for pair in test.pairs:
        if predict_text(model, pair.hypothesis) == pair.label:
            easy.append(pair.id)
            breakdown[pair.label][0] += 1
        else:
            hard.append(pair.id)
            breakdown[pair.label][1] += 1
    return PartitionManifest(
        easy_ids=tuple(easy),
        hard_ids=tuple(hard),
        per_label_breakdown={label: (easy_n, hard_n)
                             for label, (easy_n, hard_n) in breakdown.items()},
    )


def mask_premises(split: CorpusSplit, unk_symbol: str = DEFAULT_UNK_SYMBOL) -> CorpusSplit:
    """Replace every premise token with the reserved unknown symbol."""
    if not unk_symbol or any(ch.isspace() for ch in unk_symbol):
        raise ValueError(f"unk symbol must be non-empty and whitespace-free: {unk_symbol!r}")
    masked = []
    for pair in split.pairs:
        n_tokens = len(tokenize(pair.premise))
        masked.append(SentencePair(id=pair.id,
                                   premise=" ".join([unk_symbol] * n_tokens),
                                   hypothesis=pair.hypothesis,
                                   label=pair.label))
    return CorpusSplit(name=split.name, pairs=tuple(masked))


def write_manifest(manifest: PartitionManifest, path: str | Path) -> None:
    path = Path(path)
    lines = ["#easy", *manifest.easy_ids, "#hard", *manifest.hard_ids]
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


def read_manifest(path: str | Path) -> PartitionManifest:
    path = Path(path)
    lines = path.read_text(encoding="utf-8").splitlines()
    if not lines or lines[0] != "#easy":
        raise ValueError(f"{path}: manifest must start with '#easy'")
    try:
        hard_at = lines.index("#hard")
    except ValueError:
        raise ValueError(f"{path}: manifest missing '#hard' section") from None
    easy = tuple(line for line in lines[1:hard_at] if line)
    hard = tuple(line for line in lines[hard_at + 1:] if line)
    return PartitionManifest(easy_ids=easy, hard_ids=hard)
