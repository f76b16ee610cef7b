"""Corpus reading for the toolkit's line-delimited JSON format.

Records carry "premise", "hypothesis", and an integer "label" (0
entailment, 1 neutral, 2 contradiction; -1 means no gold consensus).
"id" is optional; missing ids are synthesized as "<stem>:<lineno>"
(1-based, blank lines counted) which is the same rule the evaluating
toolkit applies on ingest, so prediction files keyed by these ids join
against the same corpus file with full coverage.

Rows with label -1 cannot be trained on or scored and are skipped with a
count; any other out-of-range or non-integer label is a hard error,
raised before a model ever loads.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Union

VALID_LABELS = (0, 1, 2)
UNLABELED = -1


class CorpusFormatError(ValueError):
    """A corpus line violates the file format."""


@dataclass(frozen=True)
class Row:
    id: str
    premise: str
    hypothesis: str
    label: int


def _field(record: dict, key: str, lineno: int) -> str:
    value = record.get(key)
    if not isinstance(value, str) or not value.strip():
        raise CorpusFormatError(f"line {lineno}: {key!r} must be a non-empty string")
    return value


def read_rows(path: Union[str, Path]) -> tuple[list[Row], int]:
    """Read labeled rows from a corpus file.

    Returns (rows, skipped_unlabeled). Raises CorpusFormatError on the
    first malformed line or invalid label.
    """
    path = Path(path)
    stem = path.stem
    rows: list[Row] = []
    skipped = 0
    with path.open("r", encoding="utf-8") as handle:
        for lineno, line in enumerate(handle, start=1):
            if not line.strip():
                continue
            try:
                record = json.loads(line)
            except json.JSONDecodeError as exc:
                raise CorpusFormatError(f"line {lineno}: unparseable JSON ({exc})") from None
            if not isinstance(record, dict):
                raise CorpusFormatError(f"line {lineno}: expected an object")
            label = record.get("label")
            # bool is an int subclass; reject it explicitly
            if isinstance(label, bool) or not isinstance(label, int):
                raise CorpusFormatError(f"line {lineno}: 'label' must be an integer")
            if label == UNLABELED:
                skipped += 1
                continue
            if label not in VALID_LABELS:
                raise CorpusFormatError(
                    f"line {lineno}: label {label} outside {VALID_LABELS} (-1 for unlabeled)"
                )
            example_id = record.get("id", f"{stem}:{lineno}")
            if not isinstance(example_id, str) or not example_id:
                raise CorpusFormatError(f"line {lineno}: 'id' must be a non-empty string")
            rows.append(
                Row(
                    id=example_id,
                    premise=_field(record, "premise", lineno),
                    hypothesis=_field(record, "hypothesis", lineno),
                    label=label,
                )
            )
    return rows, skipped
