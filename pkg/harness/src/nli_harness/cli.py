"""Command-line entry point.

    train      fine-tune a classifier; optionally emit predictions after
    predict    score a corpus with a saved checkpoint

Exit codes: 0 success, 1 I/O or hardware failure, 2 malformed corpus or
bad usage.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .config import DEFAULT_MODEL, TrainConfig
from .data import CorpusFormatError
from .predict import predict
from .train import train

EXIT_OK = 0
EXIT_IO = 1
EXIT_DATA = 2


def cmd_train(args: argparse.Namespace) -> int:
    config = TrainConfig(
        train_path=args.train,
        run_dir=args.run_dir,
        model_name=args.model_name,
        batch_size=args.batch_size,
        max_seq_length=args.max_seq_length,
        epochs=args.epochs,
        seed=args.seed,
        learning_rate=args.learning_rate,
        eval_path=args.eval,
        predictions_path=args.predictions,
    )
    result = train(config)
    print(
        json.dumps(
            {
                "command": "train",
                "checkpoint": str(result.checkpoint_dir),
                "final_loss": result.final_loss,
                "n_steps": result.n_steps,
                "loss_log": str(result.loss_log_path),
                "run_log": str(result.run_log_path),
            }
        )
    )
    if config.eval_path is not None:
        report = predict(
            result.checkpoint_dir,
            config.eval_path,
            config.predictions_path,
            batch_size=config.batch_size,
            max_seq_length=config.max_seq_length,
        )
        print(
            json.dumps(
                {
                    "command": "predict",
                    "output": str(report.output_path),
                    "n_predictions": report.n_predictions,
                    "skipped_unlabeled": report.skipped_unlabeled,
                }
            )
        )
    return EXIT_OK


def cmd_predict(args: argparse.Namespace) -> int:
    report = predict(
        args.checkpoint,
        args.eval,
        args.output,
        batch_size=args.batch_size,
        max_seq_length=args.max_seq_length,
    )
    print(
        json.dumps(
            {
                "command": "predict",
                "output": str(report.output_path),
                "n_predictions": report.n_predictions,
                "skipped_unlabeled": report.skipped_unlabeled,
            }
        )
    )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nli-harness",
        description="Fine-tune an NLI classifier and emit evaluator-ready prediction files.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    sub = commands.add_parser("train", help="fine-tune a classifier")
    sub.add_argument("--train", required=True, help="training corpus (JSONL)")
    sub.add_argument("--run-dir", required=True, help="where checkpoint and logs go")
    sub.add_argument("--model-name", default=DEFAULT_MODEL, help="base model to fine-tune")
    sub.add_argument("--batch-size", type=int, default=32)
    sub.add_argument("--max-seq-length", type=int, default=128)
    sub.add_argument("--epochs", type=int, default=3)
    sub.add_argument("--seed", type=int, default=42)
    sub.add_argument(
        "--learning-rate",
        type=float,
        default=None,
        help="override the trainer's default learning rate",
    )
    sub.add_argument("--eval", help="corpus to score right after training")
    sub.add_argument("--predictions", help="where the post-training predictions go")
    sub.set_defaults(handler=cmd_train)

    sub = commands.add_parser("predict", help="score a corpus with a saved checkpoint")
    sub.add_argument("--checkpoint", required=True, help="checkpoint directory from train")
    sub.add_argument("--eval", required=True, help="corpus to score (JSONL)")
    sub.add_argument("--output", required=True, help="where the prediction file goes")
    sub.add_argument("--batch-size", type=int, default=32)
    sub.add_argument("--max-seq-length", type=int, default=128)
    sub.set_defaults(handler=cmd_predict)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except CorpusFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except RuntimeError as exc:
        # surfaces accelerator and out-of-memory failures with context
        print(f"error: training/inference runtime failure: {exc}", file=sys.stderr)
        return EXIT_IO


def entry_point() -> None:
    sys.exit(main(sys.argv[1:]))


if __name__ == "__main__":
    entry_point()
