"""Negation-artifact analysis and data augmentation for NLI corpora.

The package splits into four layers: corpus I/O (corpus), cue detection
(detector), rule-based augmentation (augment), and prediction scoring
(evaluate). The cli module wires them into the negnli command.
"""

from .augment import (
    ADVERSARIAL_NEGATE_HYPOTHESIS,
    AUTO_NEGATE_HYPOTHESIS,
    CONTRAST_NEGATE_PREMISE,
    DEFAULT_AUX_FORMS,
    DEFAULT_LABEL_MAP,
    TRANSFORMATIONS,
    AugmentationPolicy,
    AugmentReport,
    AuxLexicon,
    Insertion,
    InsertionKind,
    SkipReason,
    augment_corpus,
    detokenize,
    find_insertion_point,
    make_adversarial_pair,
    make_contrast_pair,
    manual_pairs_path,
    negate_hypothesis,
)
from .corpus import (
    AugmentedExample,
    Corpus,
    CorpusError,
    DuplicateId,
    EmptyField,
    Example,
    IngestReport,
    Label,
    MalformedRecord,
    UnknownLabel,
    UnlabeledExample,
    example_to_record,
    load_corpus,
    parse_example,
    read_corpus,
    write_corpus,
)
from .detector import (
    CueHit,
    NegationStats,
    NegationVerdict,
    Token,
    TokenSeq,
    contains_negation,
    example_has_negation,
    is_negation_cue,
    negation_stats,
    split_by_negation,
    token_surfaces,
    tokenize,
)
from .evaluate import (
    SUBSET_FULL,
    SUBSET_NEGATION,
    ClassStats,
    DeltaReport,
    EmptyJoin,
    EvalError,
    EvalReport,
    JoinResult,
    NoPairs,
    PredictionSet,
    SubsetMismatch,
    accuracy,
    compare,
    join,
    load_predictions,
    read_predictions,
    render_tables,
    report_records,
    round_pct,
    subset_eval,
)

__version__ = "0.1.0"

__all__ = [
    "ADVERSARIAL_NEGATE_HYPOTHESIS",
    "AUTO_NEGATE_HYPOTHESIS",
    "CONTRAST_NEGATE_PREMISE",
    "DEFAULT_AUX_FORMS",
    "DEFAULT_LABEL_MAP",
    "SUBSET_FULL",
    "SUBSET_NEGATION",
    "TRANSFORMATIONS",
    "AugmentationPolicy",
    "AugmentReport",
    "AugmentedExample",
    "AuxLexicon",
    "ClassStats",
    "Corpus",
    "CorpusError",
    "CueHit",
    "DeltaReport",
    "DuplicateId",
    "EmptyField",
    "EmptyJoin",
    "EvalError",
    "EvalReport",
    "Example",
    "IngestReport",
    "Insertion",
    "InsertionKind",
    "JoinResult",
    "Label",
    "MalformedRecord",
    "NegationStats",
    "NegationVerdict",
    "NoPairs",
    "PredictionSet",
    "SkipReason",
    "SubsetMismatch",
    "Token",
    "TokenSeq",
    "UnknownLabel",
    "UnlabeledExample",
    "accuracy",
    "augment_corpus",
    "compare",
    "contains_negation",
    "detokenize",
    "example_has_negation",
    "example_to_record",
    "find_insertion_point",
    "is_negation_cue",
    "join",
    "load_corpus",
    "load_predictions",
    "make_adversarial_pair",
    "make_contrast_pair",
    "manual_pairs_path",
    "negate_hypothesis",
    "negation_stats",
    "parse_example",
    "read_corpus",
    "read_predictions",
    "render_tables",
    "report_records",
    "round_pct",
    "split_by_negation",
    "subset_eval",
    "token_surfaces",
    "tokenize",
    "write_corpus",
]
