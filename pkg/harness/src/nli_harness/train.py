"""Fine-tuning: standard trainer loop plus loss and run logs.

Every step's loss lands in <run_dir>/loss_log.jsonl so training curves
can be plotted afterwards; <run_dir>/run_log.json records the optimizer,
learning rate, and scheduler actually used (trainer defaults unless the
config overrides the learning rate) together with the data and seed, so
a run is reproducible from its logs alone. The checkpoint is saved under
<run_dir>/checkpoint in the framework's own layout.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

import torch
import transformers
from transformers import (
    AutoModelForSequenceClassification,
    AutoTokenizer,
    DataCollatorWithPadding,
    Trainer,
    TrainingArguments,
    set_seed,
)

from .config import TrainConfig
from .data import CorpusFormatError, Row, read_rows

NUM_LABELS = 3


class NliDataset(torch.utils.data.Dataset):
    """Premise/hypothesis pairs tokenized up front, padded per batch."""

    def __init__(self, rows: list[Row], tokenizer, max_seq_length: int):
        self.encodings = tokenizer(
            [row.premise for row in rows],
            [row.hypothesis for row in rows],
            truncation=True,
            max_length=max_seq_length,
        )
        self.labels = [row.label for row in rows]

    def __len__(self) -> int:
        return len(self.labels)

    def __getitem__(self, index: int) -> dict:
        item = {key: values[index] for key, values in self.encodings.items()}
        item["labels"] = self.labels[index]
        return item


@dataclass(frozen=True)
class TrainResult:
    checkpoint_dir: Path
    loss_log_path: Path
    run_log_path: Path
    final_loss: float
    n_steps: int


def _training_arguments(config: TrainConfig, run_dir: Path) -> TrainingArguments:
    overrides = {}
    if config.learning_rate is not None:
        overrides["learning_rate"] = config.learning_rate
    return TrainingArguments(
        output_dir=str(run_dir / "trainer"),
        per_device_train_batch_size=config.batch_size,
        num_train_epochs=config.epochs,
        seed=config.seed,
        logging_steps=1,
        save_strategy="no",
        report_to=[],
        disable_tqdm=True,
        log_level="error",
        dataloader_pin_memory=False,
        **overrides,
    )


def train(config: TrainConfig) -> TrainResult:
    """Fine-tune per the config; returns checkpoint and log locations.

    The corpus is validated in full before any model weights load, so a
    bad label fails fast. Raises CorpusFormatError for data problems and
    OSError when the corpus file is missing.
    """
    rows, skipped_unlabeled = read_rows(config.train_path)
    if not rows:
        raise CorpusFormatError(f"{config.train_path}: no trainable examples")

    run_dir = Path(config.run_dir)
    run_dir.mkdir(parents=True, exist_ok=True)

    # seed before model load: a freshly initialized classifier head must
    # be reproducible for the same config
    set_seed(config.seed)
    tokenizer = AutoTokenizer.from_pretrained(config.model_name)
    model = AutoModelForSequenceClassification.from_pretrained(
        config.model_name, num_labels=NUM_LABELS
    )

    args = _training_arguments(config, run_dir)
    trainer = Trainer(
        model=model,
        args=args,
        train_dataset=NliDataset(rows, tokenizer, config.max_seq_length),
        data_collator=DataCollatorWithPadding(tokenizer),
        processing_class=tokenizer,
    )
    outcome = trainer.train()

    step_entries = [
        {
            "step": entry["step"],
            "epoch": entry["epoch"],
            "loss": entry["loss"],
            "learning_rate": entry["learning_rate"],
        }
        for entry in trainer.state.log_history
        if "loss" in entry
    ]
    loss_log_path = run_dir / "loss_log.jsonl"
    with loss_log_path.open("w", encoding="utf-8", newline="\n") as handle:
        for entry in step_entries:
            handle.write(json.dumps(entry) + "\n")

    run_log = {
        "model_name": config.model_name,
        "train_path": str(config.train_path),
        "n_train": len(rows),
        "skipped_unlabeled": skipped_unlabeled,
        "batch_size": config.batch_size,
        "max_seq_length": config.max_seq_length,
        "epochs": config.epochs,
        "seed": config.seed,
        "optimizer": args.optim.value,
        "learning_rate": args.learning_rate,
        "lr_scheduler": args.lr_scheduler_type.value,
        "warmup_ratio": args.warmup_ratio,
        "warmup_steps": args.warmup_steps,
        "weight_decay": args.weight_decay,
        "adam_beta1": args.adam_beta1,
        "adam_beta2": args.adam_beta2,
        "adam_epsilon": args.adam_epsilon,
        "max_grad_norm": args.max_grad_norm,
        "final_training_loss": outcome.training_loss,
        "n_steps": len(step_entries),
        "transformers_version": transformers.__version__,
        "torch_version": torch.__version__,
    }
    run_log_path = run_dir / "run_log.json"
    run_log_path.write_text(json.dumps(run_log, indent=2) + "\n", encoding="utf-8")

    checkpoint_dir = run_dir / "checkpoint"
    trainer.save_model(str(checkpoint_dir))
    tokenizer.save_pretrained(str(checkpoint_dir))

    return TrainResult(
        checkpoint_dir=checkpoint_dir,
        loss_log_path=loss_log_path,
        run_log_path=run_log_path,
        final_loss=outcome.training_loss,
        n_steps=len(step_entries),
    )
