"""Accuracy evaluation: join predictions to gold labels, score, and tabulate.

Prediction files are line-delimited JSON with keys "id" and "prediction"
(integer class code). Joining is by id so reordered prediction files cannot
silently misalign; a positional mode exists for id-less legacy files.
Missing predictions are excluded from the denominator and reported, never
counted as wrong.

Percentages display with one decimal, rounded half-up; full precision is
kept internally and deltas are computed before rounding.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from decimal import ROUND_HALF_UP, Decimal
from pathlib import Path
from typing import Callable, Iterable, Mapping, Sequence, Union

from .corpus import Corpus, DuplicateId, Example, Label, MalformedRecord

SUBSET_FULL = "full"
SUBSET_NEGATION = "negation"

_SUBSET_TITLES = {
    SUBSET_FULL: "Full validation set",
    SUBSET_NEGATION: "Negation-only subset",
}


class EvalError(Exception):
    """Base class for evaluation failures."""


class EmptyJoin(EvalError):
    """No prediction id matched any gold id; the id schemes disagree."""


class NoPairs(EvalError):
    """Nothing to score (empty subset or empty pair list)."""


class SubsetMismatch(EvalError):
    """Reports being compared were computed over different subsets."""


def round_pct(value: float, digits: int = 1) -> float:
    """Round half-up, the convention used for every displayed percentage."""
    quantum = Decimal(1).scaleb(-digits)
    return float(Decimal(repr(value)).quantize(quantum, rounding=ROUND_HALF_UP))


def _exact_pct(n_correct: int, n: int) -> float:
    return round_pct(float(Decimal(n_correct) * 100 / Decimal(n)))


@dataclass(frozen=True)
class PredictionSet:
    """Predicted label per example id, for one named model."""

    model_name: str
    predictions: Mapping[str, Label]

    def __len__(self) -> int:
        return len(self.predictions)


def read_predictions(lines: Iterable[str], model_name: str) -> PredictionSet:
    """Parse a prediction file. Each id may appear at most once.

    Legacy files without ids are accepted (a line-number id is synthesized);
    those can only be scored through the positional join.
    """
    predictions: dict[str, Label] = {}
    for lineno, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        try:
            record = json.loads(line)
        except json.JSONDecodeError as exc:
            raise MalformedRecord(f"prediction line {lineno}: {exc}") from None
        if not isinstance(record, dict) or "prediction" not in record:
            raise MalformedRecord(f"prediction line {lineno}: need a 'prediction' key")
        example_id = record.get("id", f"{model_name}:{lineno}")
        if not isinstance(example_id, str) or not example_id:
            raise MalformedRecord(f"prediction line {lineno}: 'id' must be a non-empty string")
        if example_id in predictions:
            raise DuplicateId(f"prediction id {example_id!r} appears more than once")
        predictions[example_id] = Label.parse(record["prediction"])
    return PredictionSet(model_name=model_name, predictions=predictions)


def load_predictions(path: Union[str, Path], model_name: str | None = None) -> PredictionSet:
    path = Path(path)
    with path.open("r", encoding="utf-8") as handle:
        return read_predictions(handle, model_name=model_name or path.stem)


Pair = tuple[Label, Label]  # (gold, predicted)


@dataclass(frozen=True)
class JoinResult:
    """Matched (gold, predicted) pairs plus the ids that failed to match."""

    pairs: tuple[Pair, ...]
    missing_prediction_ids: tuple[str, ...]
    unmatched_prediction_ids: tuple[str, ...]

    @property
    def full_coverage(self) -> bool:
        return not self.missing_prediction_ids and not self.unmatched_prediction_ids


def join(corpus: Corpus, preds: PredictionSet, positional: bool = False) -> JoinResult:
    """Pair gold labels with predictions by id (or by position).

    Raises EmptyJoin when nothing matches, which almost always means the
    prediction file was produced against different ids.
    """
    if positional:
        ordered = list(preds.predictions.values())
        n = min(len(corpus), len(ordered))
        pairs = tuple((corpus[i].label, ordered[i]) for i in range(n))
        missing = tuple(ex.id for ex in corpus.examples[n:])
        extra = tuple(list(preds.predictions.keys())[n:])
    else:
        pairs_list: list[Pair] = []
        missing_list: list[str] = []
        matched: set[str] = set()
        for ex in corpus:
            pred = preds.predictions.get(ex.id)
            if pred is None:
                missing_list.append(ex.id)
            else:
                pairs_list.append((ex.label, pred))
                matched.add(ex.id)
        pairs = tuple(pairs_list)
        missing = tuple(missing_list)
        extra = tuple(pid for pid in preds.predictions if pid not in matched)
    if not pairs:
        raise EmptyJoin(
            f"no prediction ids matched gold ids for model {preds.model_name!r} "
            f"(gold={len(corpus)}, predictions={len(preds)})"
        )
    return JoinResult(pairs=pairs, missing_prediction_ids=missing, unmatched_prediction_ids=extra)


@dataclass(frozen=True)
class ClassStats:
    """Count and correct-count for one gold class."""

    n: int
    n_correct: int

    @property
    def accuracy(self) -> float | None:
        return 100.0 * self.n_correct / self.n if self.n else None

    @property
    def accuracy_pct(self) -> float | None:
        return _exact_pct(self.n_correct, self.n) if self.n else None


@dataclass(frozen=True)
class EvalReport:
    """Overall and per-class accuracy for one model on one subset.

    The confusion mapping (gold label -> predicted label -> count) is kept
    because per-class accuracy already needs the counts; its row sums equal
    per-class n and its diagonal equals per-class n_correct.
    """

    model_name: str
    subset_name: str
    n_total: int
    n_correct: int
    per_class: Mapping[Label, ClassStats]
    confusion: Mapping[Label, Mapping[Label, int]] = field(default_factory=dict)

    @property
    def overall_accuracy(self) -> float:
        return 100.0 * self.n_correct / self.n_total

    @property
    def overall_accuracy_pct(self) -> float:
        return _exact_pct(self.n_correct, self.n_total)


def accuracy(
    pairs: Sequence[Pair],
    model_name: str = "model",
    subset_name: str = SUBSET_FULL,
) -> EvalReport:
    """Score (gold, predicted) pairs. Raises NoPairs on an empty input."""
    if not pairs:
        raise NoPairs("cannot score an empty pair list")
    confusion = {gold: {predicted: 0 for predicted in Label} for gold in Label}
    for gold, predicted in pairs:
        confusion[gold][predicted] += 1
    n_correct = sum(confusion[label][label] for label in Label)
    return EvalReport(
        model_name=model_name,
        subset_name=subset_name,
        n_total=len(pairs),
        n_correct=n_correct,
        per_class={
            label: ClassStats(sum(row.values()), row[label]) for label, row in confusion.items()
        },
        confusion=confusion,
    )


def subset_eval(
    corpus: Corpus,
    preds: PredictionSet,
    subset: Callable[[Example], bool],
    subset_name: str = SUBSET_NEGATION,
    positional: bool = False,
) -> EvalReport:
    """Accuracy restricted to examples passing the predicate."""
    selected = tuple(ex for ex in corpus if subset(ex))
    if not selected:
        raise NoPairs(f"subset {subset_name!r} matched no examples")
    filtered = Corpus(selected, name=f"{corpus.name}:{subset_name}")
    result = join(filtered, preds, positional=positional)
    return accuracy(result.pairs, model_name=preds.model_name, subset_name=subset_name)


@dataclass(frozen=True)
class DeltaReport:
    """Candidate minus baseline, in percentage points, on one subset."""

    baseline_name: str
    candidate_name: str
    subset_name: str
    overall_delta: float
    per_class_delta: Mapping[Label, float | None]

    @property
    def overall_delta_pct(self) -> float:
        return round_pct(self.overall_delta)

    def per_class_delta_pct(self, label: Label) -> float | None:
        delta = self.per_class_delta.get(label)
        return round_pct(delta) if delta is not None else None


def compare(baseline: EvalReport, candidate: EvalReport) -> DeltaReport:
    """Difference report; deltas use full precision, rounding happens at display."""
    if baseline.subset_name != candidate.subset_name:
        raise SubsetMismatch(
            f"cannot compare across subsets: {baseline.subset_name!r} vs {candidate.subset_name!r}"
        )
    per_class: dict[Label, float | None] = {}
    for label in Label:
        b = baseline.per_class.get(label, ClassStats(0, 0)).accuracy
        c = candidate.per_class.get(label, ClassStats(0, 0)).accuracy
        per_class[label] = (c - b) if b is not None and c is not None else None
    return DeltaReport(
        baseline_name=baseline.model_name,
        candidate_name=candidate.model_name,
        subset_name=baseline.subset_name,
        overall_delta=candidate.overall_accuracy - baseline.overall_accuracy,
        per_class_delta=per_class,
    )


def _fmt_pct(value: float | None) -> str:
    return f"{value:.1f}" if value is not None else "-"


def _table(title: str, headers: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    widths = [len(h) for h in headers]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    lines = [title]
    lines.append("  ".join(h.ljust(widths[i]) for i, h in enumerate(headers)).rstrip())
    lines.append("  ".join("-" * w for w in widths))
    for row in rows:
        lines.append("  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip())
    return "\n".join(lines)


def _subset_title(subset_name: str) -> str:
    return _SUBSET_TITLES.get(subset_name, subset_name)


def render_tables(reports: Sequence[EvalReport], deltas: Sequence[DeltaReport] = ()) -> str:
    """Human-readable accuracy tables.

    Emits, in order: per-dataset accuracy for the first model, per-model
    accuracy on the negation subset, per-model accuracy on the full set,
    per-class accuracy on the negation subset, and delta lines. Sections
    with no data still print their headers.
    """
    sections: list[str] = []
    model_order = list(dict.fromkeys(r.model_name for r in reports))

    baseline = model_order[0] if model_order else None
    rows = [
        [_subset_title(r.subset_name), _fmt_pct(r.overall_accuracy_pct), str(r.n_total)]
        for r in reports
        if r.model_name == baseline
    ]
    title = f"Accuracy by dataset: {baseline}" if baseline else "Accuracy by dataset"
    sections.append(_table(title, ["Dataset", "Accuracy (%)", "n"], rows))

    for subset, heading in ((SUBSET_NEGATION, "Model accuracy on negation-only subset"),
                            (SUBSET_FULL, "Overall model accuracy (full set)")):
        rows = [
            [r.model_name, _fmt_pct(r.overall_accuracy_pct), str(r.n_total)]
            for r in reports
            if r.subset_name == subset
        ]
        sections.append(_table(heading, ["Model", "Accuracy (%)", "n"], rows))

    negation_reports = [r for r in reports if r.subset_name == SUBSET_NEGATION]
    neg_models = list(dict.fromkeys(r.model_name for r in negation_reports))
    by_model = {r.model_name: r for r in negation_reports}
    class_rows = []
    for label in Label:
        row = [label.name.capitalize()]
        for model in neg_models:
            stats = by_model[model].per_class.get(label, ClassStats(0, 0))
            row.append(_fmt_pct(stats.accuracy_pct))
        class_rows.append(row)
    sections.append(
        _table(
            "Per-class accuracy on negation-only subset",
            ["Label", *neg_models] if neg_models else ["Label"],
            class_rows if neg_models else [],
        )
    )

    if deltas:
        lines = ["Deltas vs baseline (percentage points)"]
        for delta in deltas:
            parts = [
                f"{delta.candidate_name} vs {delta.baseline_name}",
                f"[{_subset_title(delta.subset_name)}]",
                f"overall {delta.overall_delta_pct:+.1f}",
            ]
            for label in Label:
                value = delta.per_class_delta_pct(label)
                if value is not None:
                    parts.append(f"{label.name.lower()} {value:+.1f}")
            lines.append("  " + " ".join(parts))
        sections.append("\n".join(lines))

    return "\n\n".join(sections) + "\n"


def report_records(
    reports: Sequence[EvalReport], deltas: Sequence[DeltaReport] = ()
) -> list[str]:
    """Machine-readable JSON record per table row."""
    records: list[str] = []
    for r in reports:
        rows: list[dict[str, object]] = [
            {
                "model": r.model_name,
                "subset": r.subset_name,
                "class": "all",
                "n": r.n_total,
                "n_correct": r.n_correct,
                "accuracy_pct": r.overall_accuracy_pct,
            }
        ]
        for label in Label:
            stats = r.per_class.get(label, ClassStats(0, 0))
            rows.append(
                {
                    "model": r.model_name,
                    "subset": r.subset_name,
                    "class": label.name.lower(),
                    "n": stats.n,
                    "n_correct": stats.n_correct,
                    "accuracy_pct": stats.accuracy_pct,
                }
            )
        records.extend(json.dumps(row, separators=(",", ":")) for row in rows)
    for delta in deltas:
        rows = [
            {
                "model": delta.candidate_name,
                "baseline": delta.baseline_name,
                "subset": delta.subset_name,
                "class": "all",
                "delta_pct_points": delta.overall_delta_pct,
            }
        ]
        for label in Label:
            value = delta.per_class_delta_pct(label)
            rows.append(
                {
                    "model": delta.candidate_name,
                    "baseline": delta.baseline_name,
                    "subset": delta.subset_name,
                    "class": label.name.lower(),
                    "delta_pct_points": value,
                }
            )
        records.extend(json.dumps(row, separators=(",", ":")) for row in rows)
    return records
