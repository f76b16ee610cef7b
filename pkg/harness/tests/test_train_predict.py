"""End-to-end checks on the tiny model: the smoke fine-tune, its logs,
prediction emission, determinism, and the file-format handshake with the
external evaluator.

The smoke recipe (batch 8, 4 epochs, seed 7, learning rate 5e-3) was
picked empirically: on the separable smoke corpus it learns from the
first epoch, so the epoch-average loss trend is decreasing with a wide
margin rather than hovering at the ln(3) chance plateau.
"""

import json
import math
import subprocess
import sys

import pytest

import hsynth
from nli_harness import TrainConfig, predict, train

SMOKE_BATCH = 8
SMOKE_MAX_LEN = 32
SMOKE_EPOCHS = 4
SMOKE_SEED = 7
SMOKE_LR = 5e-3
SMOKE_N = 100
STEPS_PER_EPOCH = math.ceil(SMOKE_N / SMOKE_BATCH)


def smoke_config(train_path, run_dir, model_name, **overrides) -> TrainConfig:
    settings = dict(
        train_path=train_path,
        run_dir=run_dir,
        model_name=str(model_name),
        batch_size=SMOKE_BATCH,
        max_seq_length=SMOKE_MAX_LEN,
        epochs=SMOKE_EPOCHS,
        seed=SMOKE_SEED,
        learning_rate=SMOKE_LR,
    )
    settings.update(overrides)
    return TrainConfig(**settings)


@pytest.fixture(scope="module")
def smoke_run(tiny_model_dir, smoke_corpus, tmp_path_factory):
    run_dir = tmp_path_factory.mktemp("smoke-run")
    return train(smoke_config(smoke_corpus, run_dir, tiny_model_dir))


@pytest.fixture(scope="module")
def eval_corpus(tmp_path_factory):
    path = tmp_path_factory.mktemp("eval") / "eval.jsonl"
    return hsynth.write_corpus(path, hsynth.eval_records())


def read_loss_entries(result):
    return [json.loads(line) for line in result.loss_log_path.read_text("utf-8").splitlines()]


class TestTraining:
    def test_single_epoch_run_completes(self, tiny_model_dir, smoke_corpus, tmp_path):
        result = train(smoke_config(smoke_corpus, tmp_path / "run", tiny_model_dir, epochs=1))
        assert result.n_steps == STEPS_PER_EPOCH
        assert (result.checkpoint_dir / "config.json").is_file()
        assert math.isfinite(result.final_loss)
        entries = read_loss_entries(result)
        assert len(entries) == STEPS_PER_EPOCH

    def test_loss_log_has_one_entry_per_step(self, smoke_run):
        entries = read_loss_entries(smoke_run)
        assert [entry["step"] for entry in entries] == list(
            range(1, SMOKE_EPOCHS * STEPS_PER_EPOCH + 1)
        )
        for entry in entries:
            assert set(entry) == {"step", "epoch", "loss", "learning_rate"}
            assert math.isfinite(entry["loss"])

    def test_loss_trend_decreases_over_epoch_averages(self, smoke_run):
        entries = read_loss_entries(smoke_run)
        means = []
        for epoch in range(SMOKE_EPOCHS):
            chunk = [
                entry["loss"]
                for entry in entries
                if (entry["step"] - 1) // STEPS_PER_EPOCH == epoch
            ]
            assert len(chunk) == STEPS_PER_EPOCH
            means.append(sum(chunk) / len(chunk))
        assert all(earlier > later for earlier, later in zip(means, means[1:])), means
        # the trend reflects learning, not jitter around the chance plateau
        assert means[0] - means[-1] > 0.3

    def test_run_log_records_the_recipe(self, smoke_run, tiny_model_dir, smoke_corpus):
        run_log = json.loads(smoke_run.run_log_path.read_text("utf-8"))
        assert run_log["model_name"] == str(tiny_model_dir)
        assert run_log["train_path"] == str(smoke_corpus)
        assert run_log["n_train"] == SMOKE_N
        assert run_log["skipped_unlabeled"] == 0
        assert run_log["batch_size"] == SMOKE_BATCH
        assert run_log["max_seq_length"] == SMOKE_MAX_LEN
        assert run_log["epochs"] == SMOKE_EPOCHS
        assert run_log["seed"] == SMOKE_SEED
        assert run_log["learning_rate"] == SMOKE_LR
        assert run_log["n_steps"] == SMOKE_EPOCHS * STEPS_PER_EPOCH
        assert run_log["final_training_loss"] == smoke_run.final_loss
        for key in ("optimizer", "lr_scheduler"):
            assert isinstance(run_log[key], str) and run_log[key]
        for key in ("transformers_version", "torch_version"):
            assert run_log[key]

    def test_trainer_defaults_recorded_when_not_overridden(
        self, tiny_model_dir, smoke_corpus, tmp_path
    ):
        result = train(
            smoke_config(
                smoke_corpus, tmp_path / "run", tiny_model_dir, epochs=1, learning_rate=None
            )
        )
        run_log = json.loads(result.run_log_path.read_text("utf-8"))
        assert run_log["learning_rate"] > 0
        assert run_log["optimizer"]
        assert run_log["lr_scheduler"]

    def test_checkpoint_reloads_as_a_three_way_classifier(self, smoke_run):
        from transformers import AutoConfig, AutoModelForSequenceClassification, AutoTokenizer

        assert AutoConfig.from_pretrained(smoke_run.checkpoint_dir).num_labels == 3
        AutoModelForSequenceClassification.from_pretrained(smoke_run.checkpoint_dir)
        AutoTokenizer.from_pretrained(smoke_run.checkpoint_dir)


class TestPrediction:
    def test_covers_every_labeled_row_in_corpus_order(self, smoke_run, eval_corpus, tmp_path):
        report = predict(
            smoke_run.checkpoint_dir,
            eval_corpus,
            tmp_path / "preds.jsonl",
            batch_size=2,
            max_seq_length=SMOKE_MAX_LEN,
        )
        assert report.n_predictions == 4
        assert report.skipped_unlabeled == 1
        records = [
            json.loads(line)
            for line in report.output_path.read_text("utf-8").splitlines()
        ]
        assert [record["id"] for record in records] == ["e:1", "e:2", "eval:3", "e:5"]
        for record in records:
            assert set(record) == {"id", "prediction"}
            assert record["prediction"] in (0, 1, 2)

    def test_prediction_runs_are_byte_identical(self, smoke_run, eval_corpus, tmp_path):
        first = predict(smoke_run.checkpoint_dir, eval_corpus, tmp_path / "a.jsonl")
        second = predict(smoke_run.checkpoint_dir, eval_corpus, tmp_path / "b.jsonl")
        assert first.output_path.read_bytes() == second.output_path.read_bytes()

    def test_same_seed_retraining_reproduces_predictions(
        self, smoke_run, tiny_model_dir, smoke_corpus, eval_corpus, tmp_path
    ):
        retrained = train(smoke_config(smoke_corpus, tmp_path / "rerun", tiny_model_dir))
        assert retrained.loss_log_path.read_bytes() == smoke_run.loss_log_path.read_bytes()
        first = predict(smoke_run.checkpoint_dir, eval_corpus, tmp_path / "a.jsonl")
        second = predict(retrained.checkpoint_dir, eval_corpus, tmp_path / "b.jsonl")
        assert first.output_path.read_bytes() == second.output_path.read_bytes()

    def test_external_evaluator_joins_with_full_coverage(
        self, smoke_run, eval_corpus, tmp_path
    ):
        report = predict(smoke_run.checkpoint_dir, eval_corpus, tmp_path / "preds.jsonl")
        completed = subprocess.run(
            [
                sys.executable,
                "-m",
                "negnli.cli",
                "evaluate",
                "--input",
                str(eval_corpus),
                str(report.output_path),
            ],
            capture_output=True,
            text=True,
        )
        assert completed.returncode == 0, completed.stderr
        assert "Overall model accuracy" in completed.stdout
        records = [
            json.loads(line)
            for line in completed.stdout.splitlines()
            if line.startswith("{")
        ]
        full = next(
            r for r in records if r["subset"] == "full" and r["class"] == "all"
        )
        # every labeled gold row found its prediction
        assert full["n"] == 4
