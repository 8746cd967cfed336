# STV counting with partial ballots: transfers, exhaustion, majorities.
#
# Run: python3 demos/02_stv_rounds_and_exhaustion.py

from truncvote import Election, PartialBallot, TieBreakPolicy, first_place_tally, stv_winner

# Three candidates. The (0,1) voters will transfer to 1 when 0 leaves,
# the bullet voters for 2 can never transfer anywhere.
election = Election(
    3,
    (
        PartialBallot((0, 1), 2),
        PartialBallot((1,), 2),
        PartialBallot((2,), 3),
    ),
    TieBreakPolicy(favored=2),
)

winner, trace = stv_winner(election)
print(trace.format())
print(f"winner: {winner}")

# Candidate 2 led every first-place count and still lost: once 0 was
# eliminated on the index fallback, its votes flowed to 1, which crossed
# the majority of the still-live weight (4 > 7/2).

# Exhausted ballots stop counting and the majority bar tracks the live
# weight, not the original electorate:
print()
truncated = Election(
    3,
    (
        PartialBallot((0,), 2),
        PartialBallot((1,), 3),
        PartialBallot((2, 1), 2),
    ),
)
tallies, exhausted = first_place_tally(truncated, {1, 2})
print(f"with candidate 0 gone: tallies {tallies}, exhausted weight {exhausted}")
winner, trace = stv_winner(truncated)
print(trace.format())
