"""
Finding negation cues and splitting a corpus
============================================

"""

# The detector works on whitespace-ish tokens: punctuation is peeled off
# the edges of each chunk, so "park." yields the tokens "park" and ".".
from negnli import tokenize, token_surfaces

sentence = "No, the dog isn't sleeping (or eating) in the park."
print(token_surfaces(tokenize(sentence)))

# A token is a cue when it casefolds to exactly "not" or ends in "n't".
# Curly apostrophes are folded first, so "isn’t" counts too. Lookalikes
# such as "nothing", "knot", and "cannot" are whole different tokens and
# are deliberately ignored.
from negnli import is_negation_cue, contains_negation

for word in ("not", "isn't", "isn’t", "NOT", "nothing", "knot", "cannot"):
    print(f"{word!r:12} cue: {is_negation_cue(word)}")

verdict = contains_negation(sentence)
print(verdict.has_negation, verdict.cue_spans)  # spans index into the token list

# Verdicts extend to premise/hypothesis pairs. Build a small corpus in
# memory; file-backed corpora load the same way via load_corpus(path).
from negnli import Corpus, Example, Label

corpus = Corpus(
    [
        Example("d:1", "A man plays a guitar.", "A man is not sleeping.", Label.ENTAILMENT),
        Example("d:2", "Kids run outside.", "Children are playing.", Label.ENTAILMENT),
        Example("d:3", "Nobody can hear him.", "He cannot be heard.", Label.ENTAILMENT),
        Example("d:4", "She isn't at home.", "She is away.", Label.ENTAILMENT),
        Example("d:5", "A knot holds the sail.", "The sail is tied.", Label.NEUTRAL),
    ],
    name="demo",
)

# split_by_negation gives the cue-containing subset and its complement;
# together they partition the corpus. Note d:3 lands in the complement,
# "cannot" is one word and therefore not a cue under this rule.
from negnli import split_by_negation, negation_stats

negation, complement = split_by_negation(corpus)
print([ex.id for ex in negation])     # ['d:1', 'd:4']
print([ex.id for ex in complement])   # ['d:2', 'd:3', 'd:5']

# negation_stats counts the same subset and breaks it down by gold label.
stats = negation_stats(corpus)
print(stats.as_dict())
