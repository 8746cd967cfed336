"""Pairwise tournaments over partial ballots and the Copeland rule.

Unranked candidates sit jointly in last place: a ballot counts toward
``n_over(i, j)`` when it ranks i and either ranks j below i or does not
rank j at all. When a ballot ranks neither i nor j it says nothing about
the pair.

A candidate scores +1 per pairwise win, -1 per loss and 0 per tie (the
0.5 convention, with ties scaled to integers). Two readings of "win" are
available:

* ``"expressed"`` (default): i beats j when more weight expresses i over
  j than j over i. This is the only reading that treats a pair left
  unranked by many ballots symmetrically.
* ``"half-total"``: i beats j when ``n_over(i, j)`` exceeds half of the
  total voter weight. On complete-ballot elections the two readings
  coincide; under partial ballots they can differ, and everything else
  in this package uses the expressed reading.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import CandidateId, Election, break_tie

CONVENTIONS = ("expressed", "half-total")


@dataclass(frozen=True)
class PairwiseMatrix:
    """Weighted counts of voters expressing one candidate over another."""

    n_over: tuple[tuple[int, ...], ...]
    total_weight: int

    @property
    def size(self) -> int:
        return len(self.n_over)

    def margin(self, i: CandidateId, j: CandidateId) -> int:
        """Expressed-weight margin of i over j (positive when i leads)."""
        return self.n_over[i][j] - self.n_over[j][i]

    def format(self) -> str:
        """Integer grid, one row per candidate."""
        width = max(len(str(v)) for row in self.n_over for v in row)
        return "\n".join(" ".join(f"{v:>{width}}" for v in row) for row in self.n_over)


#: Integer Copeland score per candidate.
CopelandScores = dict[CandidateId, int]


def pairwise_matrix(election: Election) -> PairwiseMatrix:
    """Count, for every ordered pair, the weight expressing the first over the second."""
    m = election.num_candidates
    n_over = [[0] * m for _ in range(m)]
    for ballot in election.ballots:
        w = ballot.weight
        ranked = ballot.ranking
        on_ballot = set(ranked)
        unranked = [c for c in election.candidates if c not in on_ballot]
        for idx, i in enumerate(ranked):
            for j in ranked[idx + 1 :]:
                n_over[i][j] += w
            for j in unranked:
                n_over[i][j] += w
    return PairwiseMatrix(tuple(tuple(row) for row in n_over), election.total_weight)


def copeland_scores(
    matrix: PairwiseMatrix, convention: str = "expressed"
) -> CopelandScores:
    """+1 per pairwise win, -1 per loss, 0 per tie, under the chosen convention."""
    if convention not in CONVENTIONS:
        raise ValueError(f"convention must be one of {CONVENTIONS}, got {convention!r}")
    m = matrix.size
    scores = {c: 0 for c in range(m)}
    if convention == "expressed":
        for i in range(m):
            for j in range(i + 1, m):
                margin = matrix.margin(i, j)
                if margin > 0:
                    scores[i] += 1
                    scores[j] -= 1
                elif margin < 0:
                    scores[i] -= 1
                    scores[j] += 1
    else:
        n = matrix.total_weight
        for i in range(m):
            for j in range(m):
                if i == j:
                    continue
                if 2 * matrix.n_over[i][j] > n:
                    scores[i] += 1
                elif 2 * matrix.n_over[i][j] < n:
                    scores[i] -= 1
    return scores


def copeland_winner(
    election: Election, convention: str = "expressed"
) -> tuple[CandidateId, CopelandScores]:
    """Highest Copeland score wins; ties go through the election's tie policy."""
    scores = copeland_scores(pairwise_matrix(election), convention)
    best = max(scores.values())
    winner = break_tie(
        [c for c in election.candidates if scores[c] == best], election.tie_break
    )
    return winner, scores
