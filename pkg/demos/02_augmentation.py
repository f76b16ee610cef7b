"""
Rule-based negation augmentation
================================

"""

# Insertion follows two rules: put "not" after the first auxiliary verb,
# or, when no auxiliary exists, before the first plausible main verb.
from negnli import AuxLexicon, find_insertion_point, tokenize, token_surfaces

lex = AuxLexicon.default()
for sentence in (
    "A dog is playing in the park.",   # auxiliary "is" -> not after it
    "He has been running.",            # first auxiliary wins: "has not been"
    "Dogs bark loudly.",               # no auxiliary -> before main verb "bark"
    "Red ball.",                       # no insertion point at all
):
    insertion = find_insertion_point(tokenize(sentence), lex)
    print(f"{sentence!r}: {insertion}")

# negate_hypothesis applies the insertion to an example's hypothesis and
# flips the label according to the policy's label map (entailment ->
# contradiction by default).
from negnli import AugmentationPolicy, Example, Label, negate_hypothesis

source = Example(
    "demo:1",
    "A dog is playing in the park.",
    "A dog is playing in the park.",
    Label.ENTAILMENT,
)
outcome = negate_hypothesis(source, lex, AugmentationPolicy())
print(outcome.hypothesis)  # A dog is not playing in the park.
print(outcome.label)       # Label.CONTRADICTION

# The return value is either the new example or a SkipReason. Hypotheses
# that already carry negation are skipped by default so the transformation
# cannot stack cues; ineligible labels are skipped too.
negated = Example("demo:2", "A boy waves.", "A boy is not waving.", Label.ENTAILMENT)
print(negate_hypothesis(negated, lex, AugmentationPolicy()))  # SkipReason.ALREADY_NEGATED

# Bare-verb insertions read better with do-support turned on.
plain = Example("demo:3", "A dog barks.", "The dog barks.", Label.ENTAILMENT)
print(negate_hypothesis(plain, lex, AugmentationPolicy()).hypothesis)
print(negate_hypothesis(plain, lex, AugmentationPolicy(do_support=True)).hypothesis)

# augment_corpus runs any mix of the three transformations over a corpus
# and returns the new examples plus a report whose buckets add up.
from negnli import Corpus, TRANSFORMATIONS, augment_corpus

corpus = Corpus(
    [
        source,
        Example("demo:4", "Two men are cooking.", "Two men are cooking.", Label.ENTAILMENT),
        Example("demo:5", "A girl reads.", "A girl sits somewhere.", Label.NEUTRAL),
    ],
    name="demo",
)
augmented, report = augment_corpus(corpus, lex, AugmentationPolicy(), kinds=TRANSFORMATIONS)
print(report.as_dict())
for ex in augmented:
    print(ex.id, "|", ex.premise, "|", ex.hypothesis, "|", ex.label.name)

# The output is a fixed point: every produced example carries a cue, so a
# second pass finds nothing left to transform.
again, second = augment_corpus(augmented, lex, AugmentationPolicy(), kinds=TRANSFORMATIONS)
print(second.produced)  # 0
