"""Negation cue detection and corpus partitioning.

A token is a negation cue iff its case-folded form is exactly "not" or ends
with "n't". Whole-token matching keeps "nothing" and "knot" out; the suffix
rule picks up contractions like "isn't" and "don't". "cannot" is not a cue:
it is neither the token "not" nor an "n't" contraction. The curly apostrophe
(U+2019) is folded to ASCII before matching, since crowd-sourced text
contains both forms.

Everything here is a pure function of its inputs.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .corpus import Corpus, Example, Label

# ASCII punctuation split off token edges; apostrophes inside a word stay put.
PUNCTUATION = frozenset(".,!?;:\"()'")

_CHUNKS = re.compile(r"\S+")


@dataclass(frozen=True)
class Token:
    """A token surface plus its character span in the source text."""

    text: str
    start: int
    end: int


TokenSeq = tuple[Token, ...]


def tokenize(text: str) -> TokenSeq:
    """Split text on whitespace, then peel leading/trailing punctuation.

    Each peeled punctuation character becomes its own token. Spans index
    into the original text, are strictly increasing, and cover every
    non-whitespace character, so the source is exactly reconstructible.
    """
    tokens: list[Token] = []
    for match in _CHUNKS.finditer(text):
        chunk = match.group()
        base = match.start()
        lo, hi = 0, len(chunk)
        leading: list[int] = []
        while lo < hi and chunk[lo] in PUNCTUATION:
            leading.append(lo)
            lo += 1
        trailing: list[int] = []
        while hi > lo and chunk[hi - 1] in PUNCTUATION:
            trailing.append(hi - 1)
            hi -= 1
        for i in leading:
            tokens.append(Token(chunk[i], base + i, base + i + 1))
        if lo < hi:
            tokens.append(Token(chunk[lo:hi], base + lo, base + hi))
        for i in reversed(trailing):
            tokens.append(Token(chunk[i], base + i, base + i + 1))
    return tuple(tokens)


def token_surfaces(tokens: TokenSeq) -> list[str]:
    return [token.text for token in tokens]


def is_negation_cue(surface: str) -> bool:
    folded = surface.casefold().replace("’", "'")
    return folded == "not" or folded.endswith("n't")


@dataclass(frozen=True)
class CueHit:
    """Location of one cue: which field it was found in, and the token index."""

    field: str
    index: int


@dataclass(frozen=True)
class NegationVerdict:
    has_negation: bool
    cue_spans: tuple[CueHit, ...]

    def __post_init__(self) -> None:
        assert self.has_negation == bool(self.cue_spans)

    @classmethod
    def from_hits(cls, hits: tuple[CueHit, ...]) -> "NegationVerdict":
        return cls(has_negation=bool(hits), cue_spans=hits)


def contains_negation(text: str, field: str = "text") -> NegationVerdict:
    """Scan one text for negation cues."""
    hits = tuple(
        CueHit(field, i) for i, token in enumerate(tokenize(text)) if is_negation_cue(token.text)
    )
    return NegationVerdict.from_hits(hits)


def example_has_negation(ex: Example) -> NegationVerdict:
    """Cue verdict over both fields: true if either side contains a cue."""
    hits = (
        contains_negation(ex.premise, field="premise").cue_spans
        + contains_negation(ex.hypothesis, field="hypothesis").cue_spans
    )
    return NegationVerdict.from_hits(hits)


def split_by_negation(corpus: Corpus) -> tuple[Corpus, Corpus]:
    """Partition a corpus into (cue-containing, cue-free) halves.

    Both outputs preserve input order and together cover the input exactly.
    """
    with_cues: list[Example] = []
    without: list[Example] = []
    for ex in corpus:
        if example_has_negation(ex).has_negation:
            with_cues.append(ex)
        else:
            without.append(ex)
    return (
        Corpus(tuple(with_cues), name=f"{corpus.name}:negation"),
        Corpus(tuple(without), name=f"{corpus.name}:complement"),
    )


@dataclass(frozen=True)
class NegationStats:
    """Cue counts for a corpus, with a per-gold-label breakdown."""

    total: int
    with_negation: int
    per_label: dict[Label, int]

    @property
    def ratio_defined(self) -> bool:
        return self.total > 0

    @property
    def ratio(self) -> float:
        return self.with_negation / self.total if self.total else 0.0

    def as_dict(self) -> dict[str, object]:
        return {
            "total": self.total,
            "with_negation": self.with_negation,
            "ratio": self.ratio if self.ratio_defined else None,
            "per_label": {label.name.lower(): self.per_label.get(label, 0) for label in Label},
        }


def negation_stats(corpus: Corpus) -> NegationStats:
    """Count cue-containing examples, overall and per gold label."""
    per_label: dict[Label, int] = {label: 0 for label in Label}
    cued = 0
    for ex in corpus:
        if example_has_negation(ex).has_negation:
            cued += 1
            per_label[ex.label] += 1
    return NegationStats(total=len(corpus), with_negation=cued, per_label=per_label)
