"""Single transferable vote over weighted partial ballots.

Counting proceeds in rounds over a shrinking set of active candidates.
Every ballot backs its highest-ranked active candidate; once all of a
ballot's candidates have been eliminated it is exhausted and stops
counting. A candidate holding a strict majority of the live
(non-exhausted) weight wins, otherwise the candidate with the fewest
first-place votes is eliminated and the count repeats.

Elimination ties are broken by removing the earliest tied candidate in
the fallback order, except that the favored candidate is never
eliminated on a tie while an alternative exists. If every ballot is
exhausted while several candidates remain, the winner is resolved by the
tie-break policy and the final round is flagged.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import CandidateId, Election, TieBreakPolicy, break_tie


@dataclass(frozen=True)
class StvRound:
    """One counting round: who was active, who got what, who left."""

    active: tuple[CandidateId, ...]
    tallies: dict[CandidateId, int]
    exhausted: int
    eliminated: Optional[CandidateId] = None
    winner: Optional[CandidateId] = None
    by_exhaustion: bool = False


@dataclass(frozen=True)
class EliminationTrace:
    rounds: tuple[StvRound, ...]

    @property
    def winner(self) -> CandidateId:
        w = self.rounds[-1].winner
        assert w is not None
        return w

    def format(self) -> str:
        """One line per round, for reports and the CLI."""
        lines = []
        for number, rnd in enumerate(self.rounds, start=1):
            tallies = " ".join(f"{c}:{rnd.tallies[c]}" for c in rnd.active)
            if rnd.winner is not None:
                action = f"winner={rnd.winner}"
                if rnd.by_exhaustion:
                    action += " (all ballots exhausted; tie-break over active set)"
            else:
                action = f"eliminated={rnd.eliminated}"
            lines.append(
                f"round {number}: tallies[{tallies}] exhausted={rnd.exhausted} {action}"
            )
        return "\n".join(lines)


def first_place_tally(
    election: Election, active: frozenset[CandidateId] | set[CandidateId]
) -> tuple[dict[CandidateId, int], int]:
    """Weight behind each active candidate, plus the exhausted weight.

    Each ballot contributes its full weight to its highest-ranked active
    candidate; ballots with no active candidate left count as exhausted.
    """
    active = frozenset(active)
    if not active:
        raise ValueError("active set must not be empty")
    tallies = {c: 0 for c in sorted(active)}
    exhausted = 0
    for ballot in election.ballots:
        top = next((c for c in ballot.ranking if c in active), None)
        if top is None:
            exhausted += ballot.weight
        else:
            tallies[top] += ballot.weight
    return tallies, exhausted


def _elimination_key(policy: TieBreakPolicy):
    if policy.fallback is None:
        return lambda c: c
    return lambda c: policy.fallback.index(c)


def stv_winner(election: Election) -> tuple[CandidateId, EliminationTrace]:
    """Run the full elimination count and return (winner, trace).

    The majority threshold is half of the live weight in the current
    round, so heavy truncation cannot leave an election without a
    winner. Majority means strictly more than half.
    """
    policy = election.tie_break
    active = set(election.candidates)
    rounds: list[StvRound] = []
    while True:
        tallies, exhausted = first_place_tally(election, active)
        live = sum(tallies.values())
        snapshot = tuple(sorted(active))
        if len(active) == 1:
            (winner,) = active
            rounds.append(StvRound(snapshot, tallies, exhausted, winner=winner))
            break
        if live == 0:
            winner = break_tie(active, policy)
            rounds.append(
                StvRound(snapshot, tallies, exhausted, winner=winner, by_exhaustion=True)
            )
            break
        leaders = [c for c in active if 2 * tallies[c] > live]
        if leaders:
            winner = break_tie(leaders, policy)
            rounds.append(StvRound(snapshot, tallies, exhausted, winner=winner))
            break
        low = min(tallies[c] for c in active)
        tied = {c for c in active if tallies[c] == low}
        if policy.favored in tied and len(tied) > 1:
            tied.discard(policy.favored)
        eliminated = min(tied, key=_elimination_key(policy))
        rounds.append(StvRound(snapshot, tallies, exhausted, eliminated=eliminated))
        active.discard(eliminated)
    return winner, EliminationTrace(tuple(rounds))
