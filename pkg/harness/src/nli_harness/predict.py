"""Prediction emission in the evaluating toolkit's file format."""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Union

import torch
from transformers import AutoModelForSequenceClassification, AutoTokenizer

from .data import read_rows


@dataclass(frozen=True)
class PredictReport:
    output_path: Path
    n_predictions: int
    skipped_unlabeled: int


def predict(
    checkpoint_dir: Union[str, Path],
    eval_path: Union[str, Path],
    output_path: Union[str, Path],
    batch_size: int = 32,
    max_seq_length: int = 128,
) -> PredictReport:
    """Score a corpus with a saved checkpoint and write a prediction file.

    One record {"id", "prediction"} per labeled eval example, in corpus
    order, ids copied from the corpus (or synthesized by the shared
    ingest rule when absent) so the evaluator joins with full coverage.
    Unlabeled rows (-1) are skipped and counted; they cannot be scored.
    """
    rows, skipped_unlabeled = read_rows(eval_path)

    tokenizer = AutoTokenizer.from_pretrained(str(checkpoint_dir))
    model = AutoModelForSequenceClassification.from_pretrained(str(checkpoint_dir))
    model.eval()

    predictions: list[int] = []
    with torch.no_grad():
        for start in range(0, len(rows), batch_size):
            batch = rows[start : start + batch_size]
            encoded = tokenizer(
                [row.premise for row in batch],
                [row.hypothesis for row in batch],
                truncation=True,
                max_length=max_seq_length,
                padding=True,
                return_tensors="pt",
            )
            logits = model(**encoded).logits
            predictions.extend(int(i) for i in logits.argmax(dim=-1))

    output_path = Path(output_path)
    with output_path.open("w", encoding="utf-8", newline="\n") as handle:
        for row, label in zip(rows, predictions):
            record = {"id": row.id, "prediction": label}
            handle.write(json.dumps(record, ensure_ascii=False) + "\n")

    return PredictReport(
        output_path=output_path,
        n_predictions=len(predictions),
        skipped_unlabeled=skipped_unlabeled,
    )
