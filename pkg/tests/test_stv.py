import random

from hypothesis import given, settings, strategies as st

from truncvote import (
    Election,
    PartialBallot,
    TieBreakPolicy,
    first_place_tally,
    stv_winner,
)

from helpers import random_election


class TestFirstPlaceTally:
    def test_everyone_active(self):
        election = Election(2, (PartialBallot((0, 1)), PartialBallot((1,))))
        tallies, exhausted = first_place_tally(election, {0, 1})
        assert tallies == {0: 1, 1: 1}
        assert exhausted == 0

    def test_transfer_after_elimination(self):
        election = Election(2, (PartialBallot((0, 1)), PartialBallot((1,))))
        tallies, exhausted = first_place_tally(election, {1})
        assert tallies == {1: 2}
        assert exhausted == 0

    def test_exhaustion(self):
        election = Election(2, (PartialBallot((0,), 3),))
        tallies, exhausted = first_place_tally(election, {1})
        assert tallies == {1: 0}
        assert exhausted == 3


class TestStvWinner:
    def test_immediate_majority(self):
        election = Election(2, (PartialBallot((1,), 2), PartialBallot((0,), 1)))
        winner, trace = stv_winner(election)
        assert winner == 1
        assert len(trace.rounds) == 1

    def test_elimination_then_transfer(self):
        election = Election(
            3,
            (PartialBallot((0, 1), 2), PartialBallot((1,), 2), PartialBallot((2,), 3)),
            TieBreakPolicy(favored=2),
        )
        winner, trace = stv_winner(election)
        assert winner == 1
        first, second = trace.rounds
        assert first.tallies == {0: 2, 1: 2, 2: 3}
        assert first.eliminated == 0
        assert second.tallies == {1: 4, 2: 3}
        assert second.winner == 1

    def test_unranked_favored_eliminated_first(self):
        election = Election(
            3,
            (PartialBallot((0,)), PartialBallot((1,))),
            TieBreakPolicy(favored=2),
        )
        winner, trace = stv_winner(election)
        assert trace.rounds[0].eliminated == 2
        assert trace.rounds[0].tallies[2] == 0
        # the 0/1 minimum tie then eliminates 0 under the index fallback
        assert winner == 1

    def test_all_exhausted_resolved_by_tie_break(self):
        # no live weight at all: the winner comes from the tie policy and
        # the final round carries the exhaustion flag
        election = Election(3, (), TieBreakPolicy(favored=2))
        winner, trace = stv_winner(election)
        assert winner == 2
        assert trace.rounds[-1].by_exhaustion

    def test_trace_format_mentions_rounds(self):
        election = Election(2, (PartialBallot((0,), 2), PartialBallot((1,), 1)))
        _, trace = stv_winner(election)
        text = trace.format()
        assert text.startswith("round 1:")
        assert "winner=0" in text


class TestStvProperties:
    @given(st.integers(0, 10_000))
    @settings(max_examples=60, deadline=None)
    def test_exhausted_weight_monotone(self, seed):
        rng = random.Random(seed)
        m = rng.randint(1, 4)
        election = random_election(rng, m, max_ballots=5)
        _, trace = stv_winner(election)
        exhausted = [r.exhausted for r in trace.rounds]
        assert exhausted == sorted(exhausted)

    @given(st.integers(0, 10_000))
    @settings(max_examples=60, deadline=None)
    def test_complete_ballots_never_exhaust(self, seed):
        rng = random.Random(seed)
        m = rng.randint(1, 4)
        ballots = tuple(
            PartialBallot(tuple(rng.sample(range(m), m)), rng.randint(1, 3))
            for _ in range(rng.randint(1, 4))
        )
        election = Election(m, ballots)
        _, trace = stv_winner(election)
        assert all(r.exhausted == 0 for r in trace.rounds)

    @given(st.integers(0, 10_000))
    @settings(max_examples=60, deadline=None)
    def test_deterministic(self, seed):
        rng = random.Random(seed)
        m = rng.randint(1, 4)
        election = random_election(rng, m, max_ballots=5)
        assert stv_winner(election) == stv_winner(election)
