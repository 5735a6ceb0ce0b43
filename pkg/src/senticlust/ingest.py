"""Corpus readers: labelled directory trees and CSV files."""

from __future__ import annotations

import csv
from pathlib import Path

from .contextual import RawReview
from .errors import ConfigError
from .lexicon import NEGATIVE, POSITIVE

_LABEL_ALIASES = {
    "positive": POSITIVE,
    "pos": POSITIVE,
    "negative": NEGATIVE,
    "neg": NEGATIVE,
}


def read_corpus_dir(root) -> list[RawReview]:
    """One review per *.txt file; pos/ and neg/ subdirectories carry labels.

    Files are visited in sorted path order so document ids are stable.
    """
    root = Path(root)
    reviews = []
    for path in sorted(root.rglob("*.txt")):
        parent = path.parent.name
        label = POSITIVE if parent == "pos" else NEGATIVE if parent == "neg" else None
        text = path.read_text(encoding="utf-8")
        reviews.append(RawReview(source_id=str(path.relative_to(root)), text=text, gold_label=label))
    if not reviews:
        raise ConfigError(f"no .txt files under {root}")
    return reviews


def read_corpus_csv(path) -> list[RawReview]:
    """Rows of id,text,label; the label column may be empty."""
    reviews = []
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None or not {"id", "text"}.issubset(reader.fieldnames):
            raise ConfigError(f"{path}: need a header with at least 'id' and 'text' columns")
        for row_no, row in enumerate(reader, start=2):
            raw_label = (row.get("label") or "").strip().lower()
            if raw_label and raw_label not in _LABEL_ALIASES:
                raise ConfigError(f"{path}: row {row_no}: unknown label {raw_label!r}")
            reviews.append(
                RawReview(
                    source_id=row["id"],
                    text=row["text"],
                    gold_label=_LABEL_ALIASES.get(raw_label),
                )
            )
    if not reviews:
        raise ConfigError(f"{path}: no data rows")
    return reviews


def read_corpus(path, corpus_format: str) -> list[RawReview]:
    if corpus_format == "dir":
        return read_corpus_dir(path)
    return read_corpus_csv(path)
