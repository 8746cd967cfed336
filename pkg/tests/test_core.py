import pytest
from hypothesis import given, strategies as st

from truncvote import (
    CandidateOutOfRange,
    DuplicateCandidateInBallot,
    Election,
    EmptyRanking,
    NonPositiveWeight,
    PartialBallot,
    TieBreakPolicy,
    break_tie,
)


class TestBallotValidation:
    def test_single_valid_ballot(self):
        election = Election(3, (PartialBallot((0, 1, 2), 1),))
        assert election.total_weight == 1

    def test_duplicate_candidate_rejected(self):
        with pytest.raises(DuplicateCandidateInBallot):
            PartialBallot((0, 0, 1), 1)

    def test_two_ballots_counted(self):
        election = Election(3, (PartialBallot((0, 1, 2)), PartialBallot((1, 0, 2))))
        assert election.total_weight == 2

    def test_empty_ranking_rejected(self):
        with pytest.raises(EmptyRanking):
            PartialBallot((), 1)

    def test_non_positive_weight_rejected(self):
        with pytest.raises(NonPositiveWeight):
            PartialBallot((0,), 0)
        with pytest.raises(NonPositiveWeight):
            PartialBallot((0,), -2)

    def test_out_of_range_candidate_rejected(self):
        with pytest.raises(CandidateOutOfRange):
            Election(2, (PartialBallot((0, 2)),))

    def test_zero_candidates_rejected(self):
        with pytest.raises(CandidateOutOfRange):
            Election(0)


class TestRankOf:
    def test_ranked_position_is_one_based(self):
        assert PartialBallot((0, 1, 2)).rank_of(1) == 2

    def test_unranked_is_none(self):
        assert PartialBallot((0, 1)).rank_of(2) is None

    def test_singleton(self):
        assert PartialBallot((2,)).rank_of(2) == 1


class TestRestrict:
    def test_order_preserving_filter(self):
        restricted = PartialBallot((0, 1, 2)).restrict({1, 2})
        assert restricted is not None
        assert restricted.ranking == (1, 2)

    def test_exhausted_ballot_is_none(self):
        assert PartialBallot((0, 1)).restrict({2}) is None

    def test_filter_keeps_relative_order(self):
        restricted = PartialBallot((3, 2, 0, 1)).restrict({2, 0, 1})
        assert restricted is not None
        assert restricted.ranking == (2, 0, 1)


class TestBreakTie:
    def test_favored_wins_its_ties(self):
        assert break_tie({0, 2}, TieBreakPolicy(favored=2)) == 2

    def test_singleton(self):
        assert break_tie({0}, TieBreakPolicy(favored=2)) == 0

    def test_fallback_when_favored_absent(self):
        assert break_tie({1, 2}, TieBreakPolicy(favored=3)) == 1

    def test_explicit_fallback_order(self):
        policy = TieBreakPolicy(fallback=(2, 1, 0))
        assert break_tie({0, 1}, policy) == 1


@st.composite
def ballots(draw, max_m=6):
    m = draw(st.integers(1, max_m))
    k = draw(st.integers(1, m))
    ranking = tuple(draw(st.permutations(range(m)))[:k])
    weight = draw(st.integers(1, 5))
    return m, PartialBallot(ranking, weight)


class TestProperties:
    @given(ballots(), st.data())
    def test_restrict_is_idempotent(self, mb, data):
        m, ballot = mb
        active = data.draw(st.sets(st.integers(0, m - 1)))
        once = ballot.restrict(active)
        if once is None:
            return
        assert once.restrict(active) == once

    @given(ballots())
    def test_restrict_full_roster_is_identity(self, mb):
        m, ballot = mb
        assert ballot.restrict(range(m)) == ballot

    @given(ballots(), st.data())
    def test_restrict_never_rescales_weight(self, mb, data):
        m, ballot = mb
        active = data.draw(st.sets(st.integers(0, m - 1)))
        restricted = ballot.restrict(active)
        if restricted is not None:
            assert restricted.weight == ballot.weight

    @given(st.sets(st.integers(0, 5), min_size=1), st.integers(0, 5))
    def test_break_tie_returns_member_deterministically(self, tied, favored):
        policy = TieBreakPolicy(favored=favored)
        winner = break_tie(tied, policy)
        assert winner in tied
        assert break_tie(set(tied), policy) == winner
        if favored in tied:
            assert winner == favored
