"""
Scoring predictions and comparing models
========================================

"""

# Evaluation joins a gold corpus with per-model prediction sets by example
# id, so shuffled prediction files cannot silently misalign.
from negnli import Corpus, Example, Label, PredictionSet, join

E, N, C = Label.ENTAILMENT, Label.NEUTRAL, Label.CONTRADICTION

corpus = Corpus(
    [
        Example("v:1", "A man is cooking.", "A man is not cooking.", C),
        Example("v:2", "A girl waves.", "Someone is waving.", E),
        Example("v:3", "Dogs are running.", "The dogs aren't asleep.", E),
        Example("v:4", "A boy reads.", "The boy likes books.", N),
        Example("v:5", "Two people talk.", "Nobody is talking.", C),
        Example("v:6", "A cat is sleeping.", "The cat is not awake.", E),
    ],
    name="dev",
)

# A baseline that struggles whenever the hypothesis contains a cue, and a
# stronger candidate. Prediction files on disk load with load_predictions.
baseline = PredictionSet("baseline", {
    "v:1": N, "v:2": E, "v:3": C, "v:4": N, "v:5": C, "v:6": N,
})
candidate = PredictionSet("augmented", {
    "v:1": C, "v:2": E, "v:3": E, "v:4": N, "v:5": C, "v:6": E,
})

result = join(corpus, baseline)
print(result.full_coverage, len(result.pairs))

# accuracy() scores (gold, predicted) pairs and keeps per-class counts
# plus the full confusion mapping.
from negnli import accuracy

report = accuracy(result.pairs, "baseline")
print(report.n_correct, "/", report.n_total, "=", report.overall_accuracy_pct, "%")
for label, stats in report.per_class.items():
    print(f"  {label.name:13} {stats.n_correct}/{stats.n}")

# subset_eval restricts scoring to examples passing a predicate, here the
# negation-only subset used throughout.
from negnli import example_has_negation, subset_eval

def cued(ex):
    return example_has_negation(ex).has_negation

base_neg = subset_eval(corpus, baseline, cued)
cand_neg = subset_eval(corpus, candidate, cued)
print(base_neg.n_total, base_neg.overall_accuracy_pct)
print(cand_neg.n_total, cand_neg.overall_accuracy_pct)

# compare() takes the difference candidate - baseline in percentage
# points; rounding happens at display so deltas never drift by an epsilon.
from negnli import compare

delta = compare(base_neg, cand_neg)
print(delta.overall_delta_pct)

# render_tables prints the same tables the CLI produces.
from negnli import render_tables

full_base = accuracy(join(corpus, baseline).pairs, "baseline")
full_cand = accuracy(join(corpus, candidate).pairs, "augmented")
print(render_tables([full_base, base_neg, full_cand, cand_neg], [delta]))
