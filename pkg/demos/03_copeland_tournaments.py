# Pairwise tournaments with unranked candidates tied in last place.
#
# Run: python3 demos/03_copeland_tournaments.py

from truncvote import (
    Election,
    PartialBallot,
    TieBreakPolicy,
    copeland_scores,
    copeland_winner,
    pairwise_matrix,
)

# The classic 4-candidate setup: three fixed voters, one strategic voter
# who wants candidate 3 to win and ties break in their favor.
fixed = (
    PartialBallot((0, 1, 2, 3)),
    PartialBallot((1, 2, 0, 3)),
    PartialBallot((3, 2, 0, 1)),
)
policy = TieBreakPolicy(favored=3)

# Ranking candidate 3 alone says nothing about the other pairs, so the
# 0/1/2 cycle keeps everyone at score zero and the tie-break decides.
partial = Election(4, fixed + (PartialBallot((3,)),), policy)
print("pairwise counts with the bullet vote:")
print(pairwise_matrix(partial).format())
winner, scores = copeland_winner(partial)
print(f"scores {scores} -> winner {winner}")

# Any complete ballot must order 0, 1, 2 and thereby break the cycle,
# handing one of them a strict win:
complete = Election(4, fixed + (PartialBallot((3, 0, 1, 2)),), policy)
winner, scores = copeland_winner(complete)
print(f"\nwith the complete vote 3>0>1>2: scores {scores} -> winner {winner}")

# Two readings of a pairwise "win" exist once ballots are partial. They
# agree on complete-ballot elections and can differ otherwise:
matrix = pairwise_matrix(partial)
print("\nexpressed-majority scores:", copeland_scores(matrix, "expressed"))
print("half-total scores:        ", copeland_scores(matrix, "half-total"))
