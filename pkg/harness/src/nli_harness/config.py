"""Run configuration for fine-tuning and prediction."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Union

DEFAULT_MODEL = "google/electra-small-discriminator"


@dataclass(frozen=True)
class TrainConfig:
    """One fine-tuning run.

    The training defaults (batch size 32, maximum sequence length 128,
    3 epochs) are the reference setup; optimizer, learning rate, and
    scheduler stay at the trainer's defaults unless learning_rate is set,
    and the values actually used are recorded in the run log either way.

    eval_path and predictions_path are optional; when both are given the
    train command emits a prediction file right after fine-tuning.
    """

    train_path: Union[str, Path]
    run_dir: Union[str, Path]
    model_name: str = DEFAULT_MODEL
    batch_size: int = 32
    max_seq_length: int = 128
    epochs: int = 3
    seed: int = 42
    learning_rate: Optional[float] = None
    eval_path: Optional[Union[str, Path]] = None
    predictions_path: Optional[Union[str, Path]] = None

    def __post_init__(self) -> None:
        if self.batch_size < 1:
            raise ValueError(f"batch_size must be positive, got {self.batch_size}")
        if self.max_seq_length < 1:
            raise ValueError(f"max_seq_length must be positive, got {self.max_seq_length}")
        if self.epochs < 1:
            raise ValueError(f"epochs must be positive, got {self.epochs}")
        if self.learning_rate is not None and self.learning_rate <= 0:
            raise ValueError(f"learning_rate must be positive, got {self.learning_rate}")
        if (self.eval_path is None) != (self.predictions_path is None):
            raise ValueError("eval_path and predictions_path must be given together")
