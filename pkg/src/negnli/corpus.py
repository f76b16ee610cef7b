"""Data model and line-delimited JSON I/O for NLI corpora.

A corpus file is UTF-8 text with one JSON object per line. Recognized keys:

    id          optional string; synthesized as "<corpus-name>:<line-number>"
                when absent so prediction joining stays deterministic
    premise     non-empty string
    hypothesis  non-empty string
    label       integer 0/1/2, one of the lowercase class names, or -1 for
                records without a usable gold label

Unknown keys are ignored on read. The writer always emits an id and an
integer label, in a fixed key order, so identical corpora serialize to
identical bytes. Text is stored exactly as found in the file; no character
normalization happens at this layer.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import IO, Iterable, Iterator, Union


class CorpusError(Exception):
    """Base class for corpus parsing and validation failures."""


class MalformedRecord(CorpusError):
    """Line is not a JSON object with the required fields."""


class UnknownLabel(CorpusError):
    """Label value is outside the three-class inventory."""


class UnlabeledExample(CorpusError):
    """Record carries the explicit no-gold-label code (-1)."""


class EmptyField(CorpusError):
    """Premise or hypothesis is blank after whitespace trimming."""


class DuplicateId(CorpusError):
    """Two examples in one corpus share an id."""


class Label(Enum):
    """Three-way inference class with the conventional integer coding."""

    ENTAILMENT = 0
    NEUTRAL = 1
    CONTRADICTION = 2

    @property
    def code(self) -> int:
        return self.value

    @classmethod
    def from_code(cls, code: int) -> "Label":
        # bool is an int subclass; JSON true/false must not sneak in as 1/0
        if isinstance(code, bool) or not isinstance(code, int):
            raise UnknownLabel(f"label code must be an integer, got {code!r}")
        if code == -1:
            raise UnlabeledExample("record has no gold label (code -1)")
        try:
            return cls(code)
        except ValueError:
            raise UnknownLabel(f"unknown label code {code!r}") from None

    @classmethod
    def from_name(cls, name: str) -> "Label":
        try:
            return _NAME_TO_LABEL[name]
        except KeyError:
            raise UnknownLabel(f"unknown label name {name!r}") from None

    @classmethod
    def parse(cls, value: object) -> "Label":
        """Accept an integer code or a lowercase class name."""
        if isinstance(value, str):
            return cls.from_name(value)
        return cls.from_code(value)  # type: ignore[arg-type]


_NAME_TO_LABEL = {label.name.lower(): label for label in Label}


@dataclass(frozen=True)
class Example:
    """One NLI record: a premise/hypothesis pair with a gold label."""

    id: str
    premise: str
    hypothesis: str
    label: Label

    def __post_init__(self) -> None:
        if not self.id:
            raise MalformedRecord("example id must be non-empty")
        if not self.premise.strip():
            raise EmptyField(f"example {self.id}: blank premise")
        if not self.hypothesis.strip():
            raise EmptyField(f"example {self.id}: blank hypothesis")


@dataclass(frozen=True)
class AugmentedExample(Example):
    """An example produced by a transformation, with provenance attached."""

    source_id: str
    transformation: str
    original_label: Label


@dataclass(frozen=True)
class Corpus:
    """An ordered, id-unique sequence of examples.

    Iteration order always equals input order. Instances are immutable and
    safe to share across threads.
    """

    examples: tuple[Example, ...]
    name: str = "corpus"

    def __post_init__(self) -> None:
        object.__setattr__(self, "examples", tuple(self.examples))
        seen: set[str] = set()
        for ex in self.examples:
            if ex.id in seen:
                raise DuplicateId(f"duplicate example id {ex.id!r} in corpus {self.name!r}")
            seen.add(ex.id)

    def __len__(self) -> int:
        return len(self.examples)

    def __iter__(self) -> Iterator[Example]:
        return iter(self.examples)

    def __getitem__(self, index: int) -> Example:
        return self.examples[index]


@dataclass
class IngestReport:
    """Line accounting for one read pass.

    Invariant: kept + skipped_unlabeled + skipped_malformed + skipped_blank
    equals total_lines, so the effective denominator of any downstream
    percentage is always visible.
    """

    total_lines: int = 0
    kept: int = 0
    skipped_unlabeled: int = 0
    skipped_malformed: int = 0
    skipped_blank: int = 0

    @property
    def skipped(self) -> int:
        return self.skipped_unlabeled + self.skipped_malformed + self.skipped_blank

    def as_dict(self) -> dict[str, int]:
        return {
            "total_lines": self.total_lines,
            "kept": self.kept,
            "skipped_unlabeled": self.skipped_unlabeled,
            "skipped_malformed": self.skipped_malformed,
            "skipped_blank": self.skipped_blank,
        }


def parse_example(line: str, fallback_id: str) -> Example:
    """Parse one corpus line into an Example.

    Records carrying the provenance keys (source_id, transformation,
    original_label) come back as AugmentedExample so augmented corpora
    survive a read/write round trip.

    Raises MalformedRecord, UnknownLabel, UnlabeledExample, or EmptyField.
    """
    try:
        record = json.loads(line)
    except json.JSONDecodeError as exc:
        raise MalformedRecord(f"unparseable line: {exc}") from None
    if not isinstance(record, dict):
        raise MalformedRecord(f"expected a JSON object, got {type(record).__name__}")

    for key in ("premise", "hypothesis"):
        if key not in record:
            raise MalformedRecord(f"missing required key {key!r}")
        if not isinstance(record[key], str):
            raise MalformedRecord(f"key {key!r} must be a string")
    if "label" not in record:
        raise MalformedRecord("missing required key 'label'")

    example_id = record.get("id", fallback_id)
    if not isinstance(example_id, str) or not example_id:
        raise MalformedRecord(f"key 'id' must be a non-empty string, got {record.get('id')!r}")

    label = Label.parse(record["label"])

    provenance_keys = ("source_id", "transformation", "original_label")
    if all(key in record for key in provenance_keys):
        source_id = record["source_id"]
        transformation = record["transformation"]
        if not isinstance(source_id, str) or not isinstance(transformation, str):
            raise MalformedRecord("provenance keys must be strings")
        return AugmentedExample(
            id=example_id,
            premise=record["premise"],
            hypothesis=record["hypothesis"],
            label=label,
            source_id=source_id,
            transformation=transformation,
            original_label=Label.parse(record["original_label"]),
        )

    return Example(
        id=example_id,
        premise=record["premise"],
        hypothesis=record["hypothesis"],
        label=label,
    )


def read_corpus(
    lines: Iterable[str],
    name: str = "corpus",
    skip_unlabeled: bool = False,
    skip_malformed: bool = False,
) -> tuple[Corpus, IngestReport]:
    """Read a corpus from an iterable of lines, preserving line order.

    Unlabeled records (gold code -1) raise UnlabeledExample unless
    skip_unlabeled is set; anything else unparseable raises unless
    skip_malformed is set. Skipped lines are counted, never silently lost.
    """
    report = IngestReport()
    examples: list[Example] = []
    for lineno, line in enumerate(lines, start=1):
        report.total_lines += 1
        if not line.strip():
            report.skipped_blank += 1
            continue
        try:
            examples.append(parse_example(line, fallback_id=f"{name}:{lineno}"))
        except UnlabeledExample:
            if not skip_unlabeled:
                raise
            report.skipped_unlabeled += 1
            continue
        except CorpusError:
            if not skip_malformed:
                raise
            report.skipped_malformed += 1
            continue
        report.kept += 1
    return Corpus(tuple(examples), name=name), report


def load_corpus(
    path: Union[str, Path],
    name: str | None = None,
    skip_unlabeled: bool = False,
    skip_malformed: bool = False,
) -> tuple[Corpus, IngestReport]:
    """read_corpus over a file path; the corpus name defaults to the stem."""
    path = Path(path)
    with path.open("r", encoding="utf-8") as handle:
        return read_corpus(
            handle,
            name=name if name is not None else path.stem,
            skip_unlabeled=skip_unlabeled,
            skip_malformed=skip_malformed,
        )


def example_to_record(ex: Example) -> dict[str, object]:
    """Serializable dict for one example, keys in the canonical order."""
    record: dict[str, object] = {
        "id": ex.id,
        "premise": ex.premise,
        "hypothesis": ex.hypothesis,
        "label": ex.label.code,
    }
    if isinstance(ex, AugmentedExample):
        record["source_id"] = ex.source_id
        record["transformation"] = ex.transformation
        record["original_label"] = ex.original_label.code
    return record


def write_corpus(corpus: Corpus, sink: Union[IO[str], str, Path]) -> int:
    """Write one JSON record per line; returns the number of lines written.

    Output is byte-deterministic: same corpus, same bytes.
    """
    if isinstance(sink, (str, Path)):
        with Path(sink).open("w", encoding="utf-8", newline="\n") as handle:
            return write_corpus(corpus, handle)
    count = 0
    for ex in corpus:
        sink.write(json.dumps(example_to_record(ex), ensure_ascii=False, separators=(",", ":")))
        sink.write("\n")
        count += 1
    return count
