"""Positional scoring rules over partial ballots.

A score vector ``(s1, ..., sm)`` fixes how a complete ranking scores:
the i-th ranked candidate receives ``s_i``. Four schemes extend a vector
to a ballot ranking only k of the m candidates:

* round-up: the i-th ranked candidate keeps ``s_i``; unranked
  candidates score 0.
* round-down: the ranked block is shifted to the bottom of the vector,
  so the i-th ranked candidate scores ``s_{m-(k-i)-1}`` and unranked
  candidates score ``s_m``; a complete ballot uses the plain vector.
  With the Borda vector this is the modified Borda count, where the
  i-th of k ranked candidates scores ``k-i+1``.
* average: ranked candidates keep ``s_i`` and every unranked candidate
  receives the exact average of the m-k leftover bottom scores, so each
  ballot hands out ``s1+...+sm`` in total no matter how short it is.
* shifted-round-down-zero: a fixed Borda variant on the implied vector
  ``(m+1, m, ..., 2)``; the i-th of k ranked candidates scores
  ``k-i+2`` and unranked candidates score 0. The scheme is determined
  by m alone and rejects any other vector.

All totals are :class:`fractions.Fraction` so score ties are detected
exactly; the average scheme routinely produces non-integer thirds.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Union

from .core import CandidateId, Election, PartialBallot, break_tie

Scoreish = Union[int, Fraction]


class SchemeVectorMismatch(ValueError):
    """shifted-round-down-zero accepts only its own implied vector."""


class ScoringScheme(Enum):
    ROUND_UP = "round-up"
    ROUND_DOWN = "round-down"
    AVERAGE = "average"
    SHIFTED_ROUND_DOWN_ZERO = "shifted-round-down-zero"


@dataclass(frozen=True)
class ScoreVector:
    """Non-negative, non-increasing scores; ``scores[i]`` is the (i+1)-th place score."""

    scores: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        scores = tuple(Fraction(s) for s in self.scores)
        object.__setattr__(self, "scores", scores)
        if not scores:
            raise ValueError("a score vector needs at least one entry")
        if any(s < 0 for s in scores):
            raise ValueError("score vectors must be non-negative")
        if any(scores[i] < scores[i + 1] for i in range(len(scores) - 1)):
            raise ValueError("score vectors must be non-increasing")

    def __len__(self) -> int:
        return len(self.scores)

    def __getitem__(self, index: int) -> Fraction:
        return self.scores[index]

    @property
    def total(self) -> Fraction:
        return sum(self.scores, Fraction(0))


#: Exact per-candidate totals; all candidates present.
ScoreTable = dict[CandidateId, Fraction]


def borda_vector(m: int) -> ScoreVector:
    """The vector (m-1, m-2, ..., 0)."""
    return ScoreVector(tuple(Fraction(m - 1 - i) for i in range(m)))


def plurality_vector(m: int) -> ScoreVector:
    """The vector (1, 0, ..., 0)."""
    return ScoreVector((Fraction(1),) + (Fraction(0),) * (m - 1))


def shifted_vector(m: int) -> ScoreVector:
    """The implied vector (m+1, m, ..., 2) of the shifted-round-down-zero scheme."""
    return ScoreVector(tuple(Fraction(m + 1 - i) for i in range(m)))


def ballot_scores(
    ballot: PartialBallot, vector: ScoreVector, scheme: ScoringScheme
) -> ScoreTable:
    """Per-candidate contribution of a single unweighted ballot.

    The caller multiplies by the ballot weight; this keeps the scheme
    logic independent of weighting.
    """
    m = len(vector)
    k = len(ballot)
    if k > m:
        raise ValueError(f"ballot ranks {k} candidates but the vector has length {m}")
    out: ScoreTable = {c: Fraction(0) for c in range(m)}

    if scheme is ScoringScheme.ROUND_UP:
        for i, c in enumerate(ballot.ranking):
            out[c] = vector[i]
    elif scheme is ScoringScheme.ROUND_DOWN:
        if k == m:
            for i, c in enumerate(ballot.ranking):
                out[c] = vector[i]
        else:
            # 1-based position i maps to vector entry m-(k-i)-1.
            for i, c in enumerate(ballot.ranking, start=1):
                out[c] = vector[m - (k - i) - 2]
            bottom = vector[m - 1]
            for c in range(m):
                if ballot.rank_of(c) is None:
                    out[c] = bottom
    elif scheme is ScoringScheme.AVERAGE:
        for i, c in enumerate(ballot.ranking):
            out[c] = vector[i]
        if k < m:
            leftover = sum((vector[j] for j in range(k, m)), Fraction(0))
            share = leftover / (m - k)
            for c in range(m):
                if ballot.rank_of(c) is None:
                    out[c] = share
    elif scheme is ScoringScheme.SHIFTED_ROUND_DOWN_ZERO:
        if vector != shifted_vector(m):
            raise SchemeVectorMismatch(
                "shifted-round-down-zero uses the implied vector (m+1, ..., 2); "
                "build it with shifted_vector(m)"
            )
        for i, c in enumerate(ballot.ranking, start=1):
            out[c] = Fraction(k - i + 2)
    else:  # pragma: no cover - exhaustive over the enum
        raise ValueError(f"unknown scheme {scheme!r}")
    return out


def evaluate_scoring(
    election: Election, vector: ScoreVector, scheme: ScoringScheme
) -> tuple[CandidateId, ScoreTable]:
    """Total up an election and return (winner, exact score table).

    The winner is the candidate with the highest total; ties go through
    the election's tie-break policy.
    """
    if len(vector) != election.num_candidates:
        raise ValueError(
            f"vector length {len(vector)} does not match "
            f"{election.num_candidates} candidates"
        )
    totals: ScoreTable = {c: Fraction(0) for c in election.candidates}
    for ballot in election.ballots:
        contrib = ballot_scores(ballot, vector, scheme)
        for c, s in contrib.items():
            totals[c] += ballot.weight * s
    best = max(totals.values())
    winner = break_tie(
        [c for c in election.candidates if totals[c] == best], election.tie_break
    )
    return winner, totals
