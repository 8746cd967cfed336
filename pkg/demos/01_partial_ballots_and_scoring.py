# How the four truncation schemes score the same partial ballot.
#
# A score vector says how a complete ranking scores; the schemes disagree
# about what a voter who ranked only k of the m candidates meant for the
# rest. Run top to bottom: python3 demos/01_partial_ballots_and_scoring.py

from truncvote import (
    Election,
    PartialBallot,
    ScoringScheme,
    TieBreakPolicy,
    ballot_scores,
    borda_vector,
    evaluate_scoring,
    shifted_vector,
)

m = 4
vector = borda_vector(m)
print(f"Borda vector for {m} candidates: {vector.scores}")

# A voter who ranked only candidate 0, leaving three candidates unsaid.
bullet = PartialBallot((0,))

for scheme in (ScoringScheme.ROUND_UP, ScoringScheme.ROUND_DOWN, ScoringScheme.AVERAGE):
    contribution = ballot_scores(bullet, vector, scheme)
    print(f"{scheme.value:>12}: {dict(contribution)}")

# Round-up keeps the top score and zeroes the rest; round-down slides the
# ranked block to the bottom of the vector (the modified Borda count);
# average hands every unranked candidate the mean of the leftover scores,
# which is why totals need exact rationals.

# The shifted variant has its own implied vector (m+1, ..., 2) and zeroes
# unranked candidates.
shifted = shifted_vector(m)
print(f"\nshifted vector: {shifted.scores}")
print("shifted scores:", dict(ballot_scores(bullet, shifted, ScoringScheme.SHIFTED_ROUND_DOWN_ZERO)))

# Scheme choice decides elections. Two voters fill out everything, one
# voter bullet-votes for candidate 2, and ties favor candidate 2:
election = Election(
    3,
    (
        PartialBallot((0, 1, 2)),
        PartialBallot((1, 0, 2)),
        PartialBallot((2,)),
    ),
    TieBreakPolicy(favored=2),
)
vector3 = borda_vector(3)
print()
for scheme in (ScoringScheme.ROUND_UP, ScoringScheme.ROUND_DOWN, ScoringScheme.AVERAGE):
    winner, table = evaluate_scoring(election, vector3, scheme)
    print(f"{scheme.value:>12}: winner {winner}, totals {dict(table)}")
