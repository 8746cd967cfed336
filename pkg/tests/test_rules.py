import pytest

from truncvote import (
    CopelandRule,
    Election,
    PartialBallot,
    ScoringScheme,
    StvRule,
    TieBreakPolicy,
    rule_from_name,
)


class TestRuleFromName:
    def test_all_names_resolve(self):
        from truncvote.rules import RULE_NAMES

        for name in RULE_NAMES:
            rule = rule_from_name(name, 4)
            assert hasattr(rule, "winner")

    def test_modified_borda_alias(self):
        assert rule_from_name("modified-borda", 3) == rule_from_name("borda-rounddown", 3)

    def test_unknown_name(self):
        with pytest.raises(ValueError):
            rule_from_name("approval", 3)

    def test_shifted_uses_implied_vector(self):
        rule = rule_from_name("shifted-borda", 3)
        assert rule.scheme is ScoringScheme.SHIFTED_ROUND_DOWN_ZERO
        assert rule.vector.scores == (4, 3, 2)


class TestRuleWinners:
    def test_rules_disagree_where_expected(self):
        # candidate 0 leads on first places, candidate 1 on pairwise wins
        election = Election(
            3,
            (
                PartialBallot((0,), 4),
                PartialBallot((1, 2, 0), 3),
                PartialBallot((2, 1, 0), 2),
            ),
            TieBreakPolicy(),
        )
        assert rule_from_name("plurality", 3).winner(election) == 0
        assert CopelandRule().winner(election) == 1
        assert StvRule().winner(election) == 1
