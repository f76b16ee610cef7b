"""Corpus reader contract: ids, unlabeled handling, hard format errors."""

import json

import pytest

import hsynth
from nli_harness import CorpusFormatError, TrainConfig, read_rows, train


def test_reads_rows_in_order_with_given_ids(tmp_path):
    path = hsynth.write_corpus(
        tmp_path / "c.jsonl",
        [
            {"id": "a", "premise": "the dog runs", "hypothesis": "the dog runs", "label": 0},
            {"id": "b", "premise": "the cat eats", "hypothesis": "a cat eats", "label": 1},
            {"id": "c", "premise": "the man sings", "hypothesis": "the man not sings", "label": 2},
        ],
    )
    rows, skipped = read_rows(path)
    assert [row.id for row in rows] == ["a", "b", "c"]
    assert [row.label for row in rows] == [0, 1, 2]
    assert rows[0].premise == "the dog runs"
    assert rows[2].hypothesis == "the man not sings"
    assert skipped == 0


def test_missing_ids_synthesized_from_stem_and_line_number(tmp_path):
    path = tmp_path / "dev.jsonl"
    lines = [
        json.dumps({"id": "given", "premise": "p", "hypothesis": "h", "label": 0}),
        "",
        json.dumps({"premise": "p", "hypothesis": "h", "label": 1}),
    ]
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    rows, _ = read_rows(path)
    # blank line still advances the count, same as the consumer's ingest
    assert [row.id for row in rows] == ["given", "dev:3"]


def test_unlabeled_rows_skipped_and_counted(tmp_path):
    path = hsynth.write_corpus(
        tmp_path / "c.jsonl",
        [
            {"id": "a", "premise": "p", "hypothesis": "h", "label": 0},
            {"id": "b", "premise": "p", "hypothesis": "h", "label": -1},
            {"id": "c", "premise": "p", "hypothesis": "h", "label": -1},
            {"id": "d", "premise": "p", "hypothesis": "h", "label": 2},
        ],
    )
    rows, skipped = read_rows(path)
    assert [row.id for row in rows] == ["a", "d"]
    assert skipped == 2


@pytest.mark.parametrize("label", [3, -2, 100])
def test_out_of_range_label_is_an_error(tmp_path, label):
    path = hsynth.write_corpus(
        tmp_path / "c.jsonl", [{"id": "a", "premise": "p", "hypothesis": "h", "label": label}]
    )
    with pytest.raises(CorpusFormatError, match="line 1"):
        read_rows(path)


@pytest.mark.parametrize("label", [True, False, "0", 1.0, None])
def test_non_integer_label_is_an_error(tmp_path, label):
    path = hsynth.write_corpus(
        tmp_path / "c.jsonl", [{"id": "a", "premise": "p", "hypothesis": "h", "label": label}]
    )
    with pytest.raises(CorpusFormatError, match="must be an integer"):
        read_rows(path)


def test_missing_label_is_an_error(tmp_path):
    path = hsynth.write_corpus(tmp_path / "c.jsonl", [{"id": "a", "premise": "p", "hypothesis": "h"}])
    with pytest.raises(CorpusFormatError):
        read_rows(path)


def test_unparseable_json_names_the_line(tmp_path):
    path = tmp_path / "c.jsonl"
    good = json.dumps({"id": "a", "premise": "p", "hypothesis": "h", "label": 0})
    path.write_text(good + "\n{broken\n", encoding="utf-8")
    with pytest.raises(CorpusFormatError, match="line 2"):
        read_rows(path)


def test_non_object_line_is_an_error(tmp_path):
    path = tmp_path / "c.jsonl"
    path.write_text("[1, 2, 3]\n", encoding="utf-8")
    with pytest.raises(CorpusFormatError, match="expected an object"):
        read_rows(path)


@pytest.mark.parametrize("field", ["premise", "hypothesis"])
def test_missing_or_blank_text_field_is_an_error(tmp_path, field):
    record = {"id": "a", "premise": "p", "hypothesis": "h", "label": 0}
    record[field] = "   "
    path = hsynth.write_corpus(tmp_path / "c.jsonl", [record])
    with pytest.raises(CorpusFormatError, match=field):
        read_rows(path)


def test_empty_id_is_an_error(tmp_path):
    path = hsynth.write_corpus(
        tmp_path / "c.jsonl", [{"id": "", "premise": "p", "hypothesis": "h", "label": 0}]
    )
    with pytest.raises(CorpusFormatError, match="'id'"):
        read_rows(path)


def test_missing_file_raises_oserror(tmp_path):
    with pytest.raises(OSError):
        read_rows(tmp_path / "absent.jsonl")


def test_train_rejects_bad_label_before_loading_any_model(tmp_path):
    path = hsynth.write_corpus(
        tmp_path / "c.jsonl", [{"id": "a", "premise": "p", "hypothesis": "h", "label": 9}]
    )
    config = TrainConfig(
        train_path=path, run_dir=tmp_path / "run", model_name="/nonexistent/model"
    )
    # a CorpusFormatError, not a model-loading failure, proves validation ran first
    with pytest.raises(CorpusFormatError):
        train(config)
    assert not (tmp_path / "run").exists()


def test_train_requires_at_least_one_trainable_example(tmp_path):
    path = hsynth.write_corpus(
        tmp_path / "c.jsonl", [{"id": "a", "premise": "p", "hypothesis": "h", "label": -1}]
    )
    config = TrainConfig(
        train_path=path, run_dir=tmp_path / "run", model_name="/nonexistent/model"
    )
    with pytest.raises(CorpusFormatError, match="no trainable examples"):
        train(config)
