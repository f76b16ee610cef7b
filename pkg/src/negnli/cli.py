"""Command-line entry point.

Five subcommands over line-delimited JSON corpus files:

    filter     split a corpus into negation-only and complement files
    stats      print cue counts as one machine-readable JSON line
    augment    write rule-based negation augmentations (+ optional manual
               pair injection into a second file)
    contrast   augment with the transformation fixed to contrast_negate_premise
    evaluate   score prediction files against gold labels and print tables

Every subcommand is deterministic and never mutates its inputs; existing
output files are not overwritten unless --force is given.

Exit codes: 0 success, 1 I/O failure (including overwrite refusal),
2 malformed data or bad usage, 3 evaluation join failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from .augment import (
    ADVERSARIAL_NEGATE_HYPOTHESIS,
    AUTO_NEGATE_HYPOTHESIS,
    CONTRAST_NEGATE_PREMISE,
    DEFAULT_LABEL_MAP,
    TRANSFORMATIONS,
    AugmentationPolicy,
    AuxLexicon,
    augment_corpus,
    manual_pairs_path,
)
from .corpus import Corpus, CorpusError, IngestReport, Label, load_corpus, write_corpus
from .detector import example_has_negation, negation_stats, split_by_negation
from .evaluate import (
    SUBSET_FULL,
    SUBSET_NEGATION,
    DeltaReport,
    EvalError,
    EvalReport,
    accuracy,
    compare,
    join,
    load_predictions,
    render_tables,
    report_records,
    round_pct,
    subset_eval,
)

EXIT_OK = 0
EXIT_IO = 1
EXIT_DATA = 2
EXIT_JOIN = 3


class UsageError(Exception):
    """Bad flag combination or value; maps to exit code 2."""


_KIND_ALIASES = {
    "auto": AUTO_NEGATE_HYPOTHESIS,
    "contrast": CONTRAST_NEGATE_PREMISE,
    "adversarial": ADVERSARIAL_NEGATE_HYPOTHESIS,
}


def _parse_kinds(spec: str) -> tuple[str, ...]:
    kinds: list[str] = []
    for item in spec.split(","):
        item = item.strip()
        if not item:
            continue
        tag = _KIND_ALIASES.get(item, item)
        if tag not in TRANSFORMATIONS:
            raise UsageError(
                f"unknown transformation kind {item!r}; choose from "
                f"{', '.join(TRANSFORMATIONS)} (aliases: {', '.join(_KIND_ALIASES)})"
            )
        kinds.append(tag)
    if not kinds:
        raise UsageError("--kinds must name at least one transformation")
    return tuple(dict.fromkeys(kinds))


def _parse_label_map(spec: str) -> dict[Label, Label]:
    mapping: dict[Label, Label] = {}
    for item in spec.split(","):
        item = item.strip()
        if not item:
            continue
        if "=" not in item:
            raise UsageError(f"--label-map entries look like gold=new, got {item!r}")
        src, dst = (part.strip().lower() for part in item.split("=", 1))
        mapping[Label.from_name(src)] = Label.from_name(dst)
    if not mapping:
        raise UsageError("--label-map must contain at least one gold=new entry")
    return mapping


def _resolve_outputs(
    inputs: Sequence[str], outputs: Sequence[str | None], force: bool
) -> list[Path | None]:
    """Validate output paths before any file is opened for writing.

    Refuses to overwrite without --force, to clobber an input, or to write
    two outputs to the same path.
    """
    input_paths = {Path(p).resolve() for p in inputs}
    seen: set[Path] = set()
    resolved: list[Path | None] = []
    for spec in outputs:
        if spec is None:
            resolved.append(None)
            continue
        path = Path(spec)
        target = path.resolve()
        if target in input_paths:
            raise UsageError(f"output path {path} is also an input; refusing to overwrite it")
        if target in seen:
            raise UsageError(f"output path {path} given more than once")
        if path.exists() and not force:
            raise FileExistsError(f"output {path} exists; pass --force to overwrite")
        seen.add(target)
        resolved.append(path)
    return resolved


def _note_skips(report: IngestReport) -> None:
    if report.skipped_unlabeled:
        print(f"note: skipped {report.skipped_unlabeled} unlabeled record(s)", file=sys.stderr)
    if report.skipped_malformed:
        print(f"note: skipped {report.skipped_malformed} malformed line(s)", file=sys.stderr)


def _record(payload: dict[str, object]) -> None:
    print(json.dumps(payload, separators=(",", ":")))


def cmd_filter(args: argparse.Namespace) -> int:
    out, complement_out = _resolve_outputs(
        [args.input], [args.output, args.complement_output], args.force
    )
    corpus, report = load_corpus(args.input, skip_unlabeled=True)
    negation, complement = split_by_negation(corpus)
    write_corpus(negation, out)
    if complement_out is not None:
        write_corpus(complement, complement_out)
    total = report.kept + report.skipped_unlabeled
    if total:
        pct = round_pct(100 * len(negation) / total)
        print(f"kept {len(negation)} of {total} ({pct:.1f}%)")
    else:
        print("kept 0 of 0")
    _note_skips(report)
    return EXIT_OK


def cmd_stats(args: argparse.Namespace) -> int:
    corpus, report = load_corpus(args.input, skip_unlabeled=True)
    stats = negation_stats(corpus)
    _record({"corpus": corpus.name, **stats.as_dict(), "ingest": report.as_dict()})
    return EXIT_OK


def _run_augment(args: argparse.Namespace, kinds: tuple[str, ...]) -> int:
    inputs = [args.input]
    if args.inject_into:
        inputs.append(args.inject_into)
    out, inject_out = _resolve_outputs(inputs, [args.output, args.inject_output], args.force)
    if (args.inject_into is None) != (inject_out is None):
        raise UsageError("--inject-into and --inject-output must be given together")

    label_map = _parse_label_map(args.label_map) if args.label_map else dict(DEFAULT_LABEL_MAP)
    if label_map.get(Label.CONTRADICTION) is Label.ENTAILMENT:
        print(
            "warning: contradiction=entailment mapping is unreliable; negating a "
            "contradicted hypothesis does not guarantee entailment",
            file=sys.stderr,
        )
    lex = AuxLexicon.from_file(args.aux_lexicon) if args.aux_lexicon else AuxLexicon.default()
    policy = AugmentationPolicy(
        label_map=label_map,
        skip_already_negated=args.skip_already_negated,
        max_per_source=args.max_per_source,
        do_support=args.do_support,
    )

    corpus, ingest = load_corpus(args.input, skip_unlabeled=True)
    augmented, report = augment_corpus(corpus, lex, policy, kinds=kinds)
    if args.merge:
        output_corpus = Corpus(corpus.examples + augmented.examples, name=f"{corpus.name}:merged")
    else:
        output_corpus = augmented
    written = write_corpus(output_corpus, out)
    _record({"command": "augment", **report.as_dict(), "written": written})
    _note_skips(ingest)

    if inject_out is not None:
        target, _ = load_corpus(args.inject_into, skip_unlabeled=True)
        pairs_file = args.manual_pairs or manual_pairs_path()
        manual, _ = load_corpus(pairs_file, name="manual")
        combined = Corpus(target.examples + manual.examples, name=f"{target.name}:injected")
        injected = write_corpus(combined, inject_out)
        _record(
            {
                "command": "inject",
                "into": str(args.inject_into),
                "added": len(manual),
                "written": injected,
            }
        )
    return EXIT_OK


def cmd_augment(args: argparse.Namespace) -> int:
    return _run_augment(args, _parse_kinds(args.kinds))


def cmd_contrast(args: argparse.Namespace) -> int:
    return _run_augment(args, (CONTRAST_NEGATE_PREMISE,))


def cmd_evaluate(args: argparse.Namespace) -> int:
    corpus, ingest = load_corpus(args.input, skip_unlabeled=True)
    names = list(args.model_name or [])
    if names and len(names) != len(args.predictions):
        raise UsageError(
            f"got {len(names)} --model-name values for {len(args.predictions)} prediction files"
        )
    pred_sets = []
    for i, path in enumerate(args.predictions):
        name = names[i] if i < len(names) else Path(path).stem
        pred_sets.append(load_predictions(path, name))
    seen_names = [p.model_name for p in pred_sets]
    if len(set(seen_names)) != len(seen_names):
        raise UsageError(f"model names must be unique, got {seen_names}; use --model-name")

    if args.subset == "negation":
        subsets = [SUBSET_NEGATION]
    elif args.subset == "all":
        subsets = [SUBSET_FULL]
    else:
        subsets = [SUBSET_FULL, SUBSET_NEGATION]

    def cued(ex) -> bool:
        return example_has_negation(ex).has_negation

    reports: list[EvalReport] = []
    by_key: dict[tuple[str, str], EvalReport] = {}
    for preds in pred_sets:
        for subset in subsets:
            if subset == SUBSET_FULL:
                result = join(corpus, preds, positional=args.positional_join)
                if result.missing_prediction_ids:
                    print(
                        f"note: {len(result.missing_prediction_ids)} gold example(s) lack a "
                        f"prediction from {preds.model_name}; excluded from scoring",
                        file=sys.stderr,
                    )
                report = accuracy(result.pairs, preds.model_name, SUBSET_FULL)
            else:
                report = subset_eval(
                    corpus, preds, cued, SUBSET_NEGATION, positional=args.positional_join
                )
            reports.append(report)
            by_key[(preds.model_name, subset)] = report

    deltas: list[DeltaReport] = []
    if len(pred_sets) > 1:
        baseline = pred_sets[0].model_name
        for preds in pred_sets[1:]:
            for subset in subsets:
                deltas.append(compare(by_key[(baseline, subset)], by_key[(preds.model_name, subset)]))

    print(render_tables(reports, deltas), end="")
    for line in report_records(reports, deltas):
        print(line)
    _note_skips(ingest)
    return EXIT_OK


def _add_augment_flags(sub: argparse.ArgumentParser, with_kinds: bool) -> None:
    sub.add_argument("--input", required=True, help="source corpus (JSONL)")
    sub.add_argument("--output", required=True, help="where to write the augmented corpus")
    sub.add_argument(
        "--aux-lexicon",
        help="auxiliary-verb list, one form per line ('#' comments); default: built-in inventory",
    )
    if with_kinds:
        sub.add_argument(
            "--kinds",
            default=AUTO_NEGATE_HYPOTHESIS,
            help="comma-separated transformation kinds: auto_negate_hypothesis, "
            "contrast_negate_premise, adversarial_negate_hypothesis "
            "(aliases: auto, contrast, adversarial); default: auto",
        )
    sub.add_argument(
        "--label-map",
        help="label-map override as gold=new pairs, e.g. "
        "'entailment=contradiction,contradiction=entailment'; "
        "default maps entailment to contradiction only",
    )
    sub.add_argument(
        "--no-skip-already-negated",
        dest="skip_already_negated",
        action="store_false",
        help="also transform examples that already contain negation "
        "(default: skip-already-negated is on)",
    )
    sub.add_argument(
        "--do-support",
        action="store_true",
        help="rewrite bare-verb insertions with do-support ('does not bark' "
        "instead of 'not barks'); off by default",
    )
    sub.add_argument(
        "--max-per-source",
        type=int,
        default=None,
        help="cap on augmented examples emitted per source example",
    )
    sub.add_argument(
        "--merge",
        action="store_true",
        help="write source examples followed by augmented ones, not augmented alone",
    )
    sub.add_argument(
        "--inject-into",
        help="also copy this corpus with the bundled manual pairs appended "
        "(requires --inject-output; the source file is left untouched)",
    )
    sub.add_argument("--inject-output", help="where the injected copy goes")
    sub.add_argument(
        "--manual-pairs",
        help="manual pair file to inject; default: the bundled template",
    )
    sub.add_argument("--force", action="store_true", help="overwrite existing output files")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="negnli",
        description="Negation-artifact analysis and augmentation for NLI corpora.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    sub = commands.add_parser(
        "filter", help="split a corpus into negation-only and complement files"
    )
    sub.add_argument("--input", required=True, help="corpus to split (JSONL)")
    sub.add_argument("--output", required=True, help="where the negation-only subset goes")
    sub.add_argument("--complement-output", help="where the cue-free remainder goes (optional)")
    sub.add_argument("--force", action="store_true", help="overwrite existing output files")
    sub.set_defaults(handler=cmd_filter)

    sub = commands.add_parser("stats", help="print negation cue counts as one JSON line")
    sub.add_argument("--input", required=True, help="corpus to scan (JSONL)")
    sub.set_defaults(handler=cmd_stats)

    sub = commands.add_parser("augment", help="write rule-based negation augmentations")
    _add_augment_flags(sub, with_kinds=True)
    sub.set_defaults(handler=cmd_augment)

    sub = commands.add_parser(
        "contrast", help="augment with the transformation fixed to contrast_negate_premise"
    )
    _add_augment_flags(sub, with_kinds=False)
    sub.set_defaults(handler=cmd_contrast)

    sub = commands.add_parser("evaluate", help="score prediction files against a gold corpus")
    sub.add_argument("--input", required=True, help="gold corpus (JSONL)")
    sub.add_argument(
        "predictions",
        nargs="+",
        metavar="PREDICTIONS",
        help="prediction files (JSONL with id + prediction); the first is the baseline",
    )
    sub.add_argument(
        "--model-name",
        action="append",
        help="display name for each prediction file, repeatable; default: file stem",
    )
    sub.add_argument(
        "--subset",
        choices=["negation", "all"],
        help="restrict reports to the negation subset or to the full set; "
        "default reports both",
    )
    sub.add_argument(
        "--positional-join",
        action="store_true",
        help="pair predictions with gold rows by file position instead of by id",
    )
    sub.set_defaults(handler=cmd_evaluate)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except CorpusError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except EvalError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_JOIN
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA


def entry_point() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry_point()
