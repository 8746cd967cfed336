"""Candidates, weighted partial ballots, elections, and tie-breaking.

A partial ballot is a strict ranking of a non-empty subset of the
candidates; everyone left off the ballot is unranked, and each voting
rule decides what that means. A ballot of weight w counts exactly like w
voters casting the identical ranking.

Candidates are dense integer indices ``0 .. m-1``. All types here are
immutable and every operation is a pure function, so they can be shared
freely between threads.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

CandidateId = int


class BallotError(ValueError):
    """Invalid ballot or election input."""


class EmptyRanking(BallotError):
    pass


class DuplicateCandidateInBallot(BallotError):
    pass


class NonPositiveWeight(BallotError):
    pass


class CandidateOutOfRange(BallotError):
    pass


@dataclass(frozen=True, order=True)
class PartialBallot:
    """A strict ranking of some of the candidates, with an integer weight.

    ``ranking[0]`` is the most preferred candidate. A voter who ranks
    nobody is modeled by omitting the ballot entirely, so empty rankings
    are rejected.
    """

    ranking: tuple[CandidateId, ...]
    weight: int = 1

    def __post_init__(self) -> None:
        object.__setattr__(self, "ranking", tuple(self.ranking))
        if not self.ranking:
            raise EmptyRanking("a ballot must rank at least one candidate")
        if len(set(self.ranking)) != len(self.ranking):
            raise DuplicateCandidateInBallot(
                f"ranking {self.ranking} lists a candidate more than once"
            )
        if not isinstance(self.weight, int) or self.weight < 1:
            raise NonPositiveWeight(
                f"ballot weight must be a positive integer, got {self.weight!r}"
            )

    def __len__(self) -> int:
        return len(self.ranking)

    def rank_of(self, candidate: CandidateId) -> Optional[int]:
        """1-based position of ``candidate`` on this ballot, or None if unranked."""
        try:
            return self.ranking.index(candidate) + 1
        except ValueError:
            return None

    def restrict(self, active: Iterable[CandidateId]) -> Optional["PartialBallot"]:
        """Drop every candidate outside ``active``, keeping order and weight.

        Returns None when no ranked candidate survives (the ballot is
        exhausted). Weights are never rescaled.
        """
        active = frozenset(active)
        kept = tuple(c for c in self.ranking if c in active)
        if not kept:
            return None
        if kept == self.ranking:
            return self
        return PartialBallot(kept, self.weight)


@dataclass(frozen=True)
class TieBreakPolicy:
    """Deterministic resolution of ties between candidates.

    ``favored`` wins every tie it takes part in; in manipulation problems
    this is the coalition's preferred candidate. Ties not involving the
    favored candidate go to the earliest candidate in ``fallback`` (a
    total order over candidate indices), or to the lowest index when no
    fallback is given.
    """

    favored: Optional[CandidateId] = None
    fallback: Optional[tuple[CandidateId, ...]] = None

    def preference_key(self, candidate: CandidateId) -> tuple[int, int]:
        """Sort key; :func:`break_tie` picks the minimum under it."""
        if candidate == self.favored:
            return (0, 0)
        if self.fallback is None:
            return (1, candidate)
        return (1, self.fallback.index(candidate))


def break_tie(tied: Iterable[CandidateId], policy: TieBreakPolicy) -> CandidateId:
    """Pick one candidate out of ``tied``; deterministic, always an element of ``tied``."""
    pool = list(tied)
    if not pool:
        raise ValueError("cannot break a tie among zero candidates")
    return min(pool, key=policy.preference_key)


@dataclass(frozen=True)
class Election:
    """A candidate roster, a multiset of weighted ballots, and a tie policy."""

    num_candidates: int
    ballots: tuple[PartialBallot, ...] = ()
    tie_break: TieBreakPolicy = field(default_factory=TieBreakPolicy)

    def __post_init__(self) -> None:
        if self.num_candidates < 1:
            raise CandidateOutOfRange("an election needs at least one candidate")
        object.__setattr__(self, "ballots", tuple(self.ballots))
        for ballot in self.ballots:
            for c in ballot.ranking:
                if not 0 <= c < self.num_candidates:
                    raise CandidateOutOfRange(
                        f"candidate {c} outside roster of size {self.num_candidates}"
                    )

    @property
    def total_weight(self) -> int:
        """Number of voters, counting a weight-w ballot as w voters."""
        return sum(b.weight for b in self.ballots)

    @property
    def candidates(self) -> range:
        return range(self.num_candidates)

    def with_ballots(
        self,
        extra: Iterable[PartialBallot],
        tie_break: Optional[TieBreakPolicy] = None,
    ) -> "Election":
        """A copy with ``extra`` ballots appended, optionally under a new tie policy."""
        return Election(
            self.num_candidates,
            self.ballots + tuple(extra),
            self.tie_break if tie_break is None else tie_break,
        )
