"""Rule-based negation augmentation for NLI corpora.

Three transformations, all built on the same insertion rule: put "not" after
the first auxiliary verb, or before the first main-verb candidate when the
sentence has no auxiliary.

    auto_negate_hypothesis      negate the hypothesis, remap the label
    contrast_negate_premise     negate the premise, keep the hypothesis
    adversarial_negate_hypothesis
                                keep the premise, negate the hypothesis

By default only Entailment sources are eligible and the produced label is
Contradiction. Negating the hypothesis of a Neutral or Contradiction pair
does not yield a determinate label, so those stay out unless the caller
overrides the label map explicitly.

The main-verb fallback is a heuristic, not a parse: it accepts some noise
(plural nouns ending in -s, for instance) and skips rather than guess when
no candidate exists.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from importlib import resources
from pathlib import Path
from typing import Iterable, Mapping, Union

from .corpus import AugmentedExample, Corpus, Example, Label
from .detector import (
    PUNCTUATION,
    TokenSeq,
    contains_negation,
    example_has_negation,
    tokenize,
    token_surfaces,
)

AUTO_NEGATE_HYPOTHESIS = "auto_negate_hypothesis"
CONTRAST_NEGATE_PREMISE = "contrast_negate_premise"
ADVERSARIAL_NEGATE_HYPOTHESIS = "adversarial_negate_hypothesis"

# Canonical application order; augment_corpus emits per source in this order.
TRANSFORMATIONS = (
    AUTO_NEGATE_HYPOTHESIS,
    CONTRAST_NEGATE_PREMISE,
    ADVERSARIAL_NEGATE_HYPOTHESIS,
)

DEFAULT_AUX_FORMS = (
    "am", "is", "are", "was", "were", "be", "been", "being",
    "has", "have", "had", "do", "does", "did",
    "can", "could", "will", "would", "shall", "should", "may", "might", "must",
)

_REQUIRED_AUX = frozenset({"is", "are", "have"})


def _read_wordlist(lines: Iterable[str]) -> list[str]:
    words = []
    for line in lines:
        word = line.split("#", 1)[0].strip().casefold()
        if word:
            words.append(word)
    return words


def _packaged_wordlist(filename: str) -> frozenset[str]:
    text = resources.files("negnli.data").joinpath(filename).read_text(encoding="utf-8")
    return frozenset(_read_wordlist(text.splitlines()))


CLOSED_CLASS_WORDS = _packaged_wordlist("stopwords.txt")
COMMON_VERBS = _packaged_wordlist("verbs.txt")


class AuxLexicon:
    """Case-folded set of auxiliary-verb surface forms.

    Must contain at least "is", "are", and "have"; an auxiliary inventory
    without those cannot host the insertion rule.
    """

    def __init__(self, forms: Iterable[str]):
        self.forms = tuple(dict.fromkeys(form.casefold() for form in forms))
        self._form_set = frozenset(self.forms)
        missing = _REQUIRED_AUX - self._form_set
        if missing:
            raise ValueError(f"auxiliary lexicon must include {sorted(missing)}")

    def __contains__(self, surface: str) -> bool:
        return surface.casefold() in self._form_set

    def __len__(self) -> int:
        return len(self.forms)

    @classmethod
    def default(cls) -> "AuxLexicon":
        return cls(DEFAULT_AUX_FORMS)

    @classmethod
    def from_file(cls, path: Union[str, Path]) -> "AuxLexicon":
        """Load one surface form per line; '#' starts a comment."""
        with Path(path).open("r", encoding="utf-8") as handle:
            return cls(_read_wordlist(handle))


class InsertionKind(Enum):
    AFTER_AUXILIARY = "after_auxiliary"
    BEFORE_MAIN_VERB = "before_main_verb"


@dataclass(frozen=True)
class Insertion:
    """Where "not" goes: after the auxiliary at index, or before the verb at index."""

    kind: InsertionKind
    index: int

    @property
    def insert_at(self) -> int:
        if self.kind is InsertionKind.AFTER_AUXILIARY:
            return self.index + 1
        return self.index


def _is_main_verb_candidate(surface: str, lex: AuxLexicon) -> bool:
    folded = surface.casefold()
    if folded in lex or folded in CLOSED_CLASS_WORDS:
        return False
    if not surface.isalpha():
        return False
    if len(folded) >= 3 and folded.endswith(("s", "ed", "ing")):
        return True
    return folded in COMMON_VERBS


def find_insertion_point(tokens: TokenSeq, lex: AuxLexicon) -> Insertion | None:
    """Pick the insertion slot for "not", or None when no slot exists.

    First auxiliary wins. Failing that, the first token at index >= 1 that
    is not an auxiliary, not closed-class, and either carries an -s/-ed/-ing
    ending or appears in the bundled verb list.
    """
    for i, token in enumerate(tokens):
        if token.text.casefold() in lex:
            return Insertion(InsertionKind.AFTER_AUXILIARY, i)
    for j, token in enumerate(tokens):
        if j == 0:
            continue
        if _is_main_verb_candidate(token.text, lex):
            return Insertion(InsertionKind.BEFORE_MAIN_VERB, j)
    return None


def detokenize(surfaces: Iterable[str]) -> str:
    """Join tokens with single spaces; punctuation-only tokens attach left."""
    parts: list[str] = []
    for surface in surfaces:
        if parts and surface and all(ch in PUNCTUATION for ch in surface):
            parts[-1] += surface
        else:
            parts.append(surface)
    return " ".join(parts)


def _lemmatize_for_do_support(verb: str) -> tuple[str, str]:
    """Crude (do-form, lemma) split for an inflected verb.

    Prefers stems found in the bundled verb list; otherwise strips the
    ending mechanically and accepts the noise.
    """
    folded = verb.casefold()
    if folded.endswith("ies") and len(folded) > 4:
        return "does", folded[:-3] + "y"
    if folded.endswith("es") and len(folded) > 3:
        for stem in (folded[:-2], folded[:-1]):
            if stem in COMMON_VERBS:
                return "does", stem
        if folded[:-2].endswith(("s", "sh", "ch", "x", "z", "o")):
            return "does", folded[:-2]
        return "does", folded[:-1]
    if folded.endswith("s") and not folded.endswith("ss") and len(folded) > 2:
        return "does", folded[:-1]
    if folded.endswith("ed") and len(folded) > 3:
        for stem in (folded[:-2], folded[:-1], folded[:-3]):
            if stem in COMMON_VERBS:
                return "did", stem
        return "did", folded[:-2]
    return "do", folded


def _negate_surfaces(tokens: TokenSeq, insertion: Insertion, do_support: bool) -> list[str]:
    surfaces = token_surfaces(tokens)
    if do_support and insertion.kind is InsertionKind.BEFORE_MAIN_VERB:
        aux, lemma = _lemmatize_for_do_support(surfaces[insertion.index])
        return surfaces[: insertion.index] + [aux, "not", lemma] + surfaces[insertion.index + 1 :]
    at = insertion.insert_at
    return surfaces[:at] + ["not"] + surfaces[at:]


class SkipReason(Enum):
    """Why a transformation declined to produce an example. Skips are values."""

    ALREADY_NEGATED = "already_negated"
    LABEL_INELIGIBLE = "label_ineligible"
    NO_INSERTION_POINT = "no_insertion_point"


DEFAULT_LABEL_MAP: Mapping[Label, Label] = {Label.ENTAILMENT: Label.CONTRADICTION}


@dataclass(frozen=True)
class AugmentationPolicy:
    """Knobs for the automated hypothesis negation.

    label_map says which gold labels are eligible and what the produced
    label becomes. The default maps Entailment to Contradiction and nothing
    else. max_per_source of None means unlimited.
    """

    label_map: Mapping[Label, Label] = field(default_factory=lambda: dict(DEFAULT_LABEL_MAP))
    skip_already_negated: bool = True
    max_per_source: int | None = None
    do_support: bool = False


AugmentOutcome = Union[AugmentedExample, SkipReason]


def negate_hypothesis(
    ex: Example,
    lex: AuxLexicon | None = None,
    policy: AugmentationPolicy | None = None,
) -> AugmentOutcome:
    """Insert "not" into the hypothesis and remap the label per policy.

    Returns a SkipReason instead of an example when the hypothesis already
    carries negation, the gold label is not in the policy's map, or no
    insertion slot exists.
    """
    lex = lex or AuxLexicon.default()
    policy = policy or AugmentationPolicy()
    if policy.skip_already_negated and contains_negation(ex.hypothesis).has_negation:
        return SkipReason.ALREADY_NEGATED
    if ex.label not in policy.label_map:
        return SkipReason.LABEL_INELIGIBLE
    tokens = tokenize(ex.hypothesis)
    insertion = find_insertion_point(tokens, lex)
    if insertion is None:
        return SkipReason.NO_INSERTION_POINT
    return AugmentedExample(
        id=f"{ex.id}:{AUTO_NEGATE_HYPOTHESIS}",
        premise=ex.premise,
        hypothesis=detokenize(_negate_surfaces(tokens, insertion, policy.do_support)),
        label=policy.label_map[ex.label],
        source_id=ex.id,
        transformation=AUTO_NEGATE_HYPOTHESIS,
        original_label=ex.label,
    )


def _clauses(text: str) -> list[str]:
    parts = []
    for chunk in text.replace(";", ",").split(","):
        normalized = chunk.strip().rstrip(".!?").strip().casefold()
        if normalized:
            parts.append(normalized)
    return parts


def _hypothesis_restates_premise(ex: Example) -> bool:
    hypothesis = ex.hypothesis.strip().rstrip(".!?").strip().casefold()
    return bool(hypothesis) and hypothesis in _clauses(ex.premise)


def make_adversarial_pair(
    ex: Example,
    lex: AuxLexicon | None = None,
    skip_already_negated: bool = True,
    do_support: bool = False,
) -> AugmentOutcome:
    """Keep the premise, emit the negated hypothesis, label Contradiction.

    Eligible when the source label is Entailment, or when the hypothesis
    restates a clause of the premise. Skips any example that already
    contains negation in either field: a second pass of the augmenter over
    its own output must produce nothing.
    """
    lex = lex or AuxLexicon.default()
    if skip_already_negated and example_has_negation(ex).has_negation:
        return SkipReason.ALREADY_NEGATED
    if ex.label is not Label.ENTAILMENT and not _hypothesis_restates_premise(ex):
        return SkipReason.LABEL_INELIGIBLE
    tokens = tokenize(ex.hypothesis)
    insertion = find_insertion_point(tokens, lex)
    if insertion is None:
        return SkipReason.NO_INSERTION_POINT
    return AugmentedExample(
        id=f"{ex.id}:{ADVERSARIAL_NEGATE_HYPOTHESIS}",
        premise=ex.premise,
        hypothesis=detokenize(_negate_surfaces(tokens, insertion, do_support)),
        label=Label.CONTRADICTION,
        source_id=ex.id,
        transformation=ADVERSARIAL_NEGATE_HYPOTHESIS,
        original_label=ex.label,
    )


def make_contrast_pair(
    ex: Example,
    lex: AuxLexicon | None = None,
    skip_already_negated: bool = True,
    do_support: bool = False,
) -> AugmentOutcome:
    """Negate the premise, keep the hypothesis, label Contradiction.

    The minimal premise edit that inverts an Entailment pair; defined only
    for Entailment sources.
    """
    lex = lex or AuxLexicon.default()
    if skip_already_negated and contains_negation(ex.premise).has_negation:
        return SkipReason.ALREADY_NEGATED
    if ex.label is not Label.ENTAILMENT:
        return SkipReason.LABEL_INELIGIBLE
    tokens = tokenize(ex.premise)
    insertion = find_insertion_point(tokens, lex)
    if insertion is None:
        return SkipReason.NO_INSERTION_POINT
    return AugmentedExample(
        id=f"{ex.id}:{CONTRAST_NEGATE_PREMISE}",
        premise=detokenize(_negate_surfaces(tokens, insertion, do_support)),
        hypothesis=ex.hypothesis,
        label=Label.CONTRADICTION,
        source_id=ex.id,
        transformation=CONTRAST_NEGATE_PREMISE,
        original_label=ex.label,
    )


@dataclass
class AugmentReport:
    """Outcome accounting; every attempted (example, transformation) pair
    lands in exactly one bucket, so produced + skipped == attempts."""

    sources: int = 0
    attempts: int = 0
    produced: int = 0
    skipped_already_negated: int = 0
    skipped_no_insertion_point: int = 0
    skipped_label_ineligible: int = 0

    @property
    def skipped(self) -> int:
        return (
            self.skipped_already_negated
            + self.skipped_no_insertion_point
            + self.skipped_label_ineligible
        )

    def as_dict(self) -> dict[str, int]:
        return {
            "sources": self.sources,
            "attempts": self.attempts,
            "produced": self.produced,
            "skipped_already_negated": self.skipped_already_negated,
            "skipped_no_insertion_point": self.skipped_no_insertion_point,
            "skipped_label_ineligible": self.skipped_label_ineligible,
        }


_SKIP_FIELD = {
    SkipReason.ALREADY_NEGATED: "skipped_already_negated",
    SkipReason.NO_INSERTION_POINT: "skipped_no_insertion_point",
    SkipReason.LABEL_INELIGIBLE: "skipped_label_ineligible",
}


def _apply(tag: str, ex: Example, lex: AuxLexicon, policy: AugmentationPolicy) -> AugmentOutcome:
    if tag == AUTO_NEGATE_HYPOTHESIS:
        return negate_hypothesis(ex, lex, policy)
    if tag == CONTRAST_NEGATE_PREMISE:
        return make_contrast_pair(ex, lex, policy.skip_already_negated, policy.do_support)
    if tag == ADVERSARIAL_NEGATE_HYPOTHESIS:
        return make_adversarial_pair(ex, lex, policy.skip_already_negated, policy.do_support)
    raise ValueError(f"unknown transformation {tag!r}")


def augment_corpus(
    corpus: Corpus,
    lex: AuxLexicon | None = None,
    policy: AugmentationPolicy | None = None,
    kinds: Iterable[str] = (AUTO_NEGATE_HYPOTHESIS,),
) -> tuple[Corpus, AugmentReport]:
    """Apply the selected transformations to every example.

    Output order is deterministic: source order, then the canonical
    transformation order within each source.
    """
    lex = lex or AuxLexicon.default()
    policy = policy or AugmentationPolicy()
    kind_set = set(kinds)
    unknown = kind_set - set(TRANSFORMATIONS)
    if unknown:
        raise ValueError(f"unknown transformation kinds: {sorted(unknown)}")

    report = AugmentReport(sources=len(corpus))
    produced: list[Example] = []
    for ex in corpus:
        emitted = 0
        for tag in TRANSFORMATIONS:
            if tag not in kind_set:
                continue
            if policy.max_per_source is not None and emitted >= policy.max_per_source:
                break
            report.attempts += 1
            outcome = _apply(tag, ex, lex, policy)
            if isinstance(outcome, SkipReason):
                name = _SKIP_FIELD[outcome]
                setattr(report, name, getattr(report, name) + 1)
            else:
                produced.append(outcome)
                report.produced += 1
                emitted += 1
    return Corpus(tuple(produced), name=f"{corpus.name}:augmented"), report


def manual_pairs_path() -> Path:
    """Path of the bundled hand-written contrast/adversarial pair file."""
    return Path(str(resources.files("negnli.data").joinpath("manual_pairs.jsonl")))
