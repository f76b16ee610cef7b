"""Fine-tuning harness for NLI classifiers.

Trains a transformer sequence classifier on JSONL NLI corpora and writes
prediction files that the companion evaluation tooling consumes directly.
"""

from .config import DEFAULT_MODEL, TrainConfig
from .data import VALID_LABELS, CorpusFormatError, Row, read_rows
from .predict import PredictReport, predict
from .train import TrainResult, train

__all__ = [
    "DEFAULT_MODEL",
    "TrainConfig",
    "VALID_LABELS",
    "CorpusFormatError",
    "Row",
    "read_rows",
    "PredictReport",
    "predict",
    "TrainResult",
    "train",
]

__version__ = "0.1.0"
