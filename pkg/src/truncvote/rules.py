"""Uniform rule descriptors: evaluate a rule on an election, get a winner.

A rule object bundles everything needed to decide an election, so the
manipulation solvers and the CLI can treat scoring rules, STV and
Copeland interchangeably.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .copeland import copeland_winner
from .core import CandidateId, Election
from .scoring import (
    ScoreVector,
    ScoringScheme,
    borda_vector,
    evaluate_scoring,
    plurality_vector,
    shifted_vector,
)
from .stv import stv_winner


@dataclass(frozen=True)
class ScoringRule:
    vector: ScoreVector
    scheme: ScoringScheme

    @property
    def num_candidates(self) -> int:
        return len(self.vector)

    def winner(self, election: Election) -> CandidateId:
        return evaluate_scoring(election, self.vector, self.scheme)[0]


@dataclass(frozen=True)
class StvRule:
    def winner(self, election: Election) -> CandidateId:
        return stv_winner(election)[0]


@dataclass(frozen=True)
class CopelandRule:
    convention: str = "expressed"

    def winner(self, election: Election) -> CandidateId:
        return copeland_winner(election, self.convention)[0]


Rule = Union[ScoringRule, StvRule, CopelandRule]


def borda_round_up(m: int) -> ScoringRule:
    return ScoringRule(borda_vector(m), ScoringScheme.ROUND_UP)


def modified_borda(m: int) -> ScoringRule:
    """Borda with round-down: the i-th of k ranked candidates scores k-i+1."""
    return ScoringRule(borda_vector(m), ScoringScheme.ROUND_DOWN)


def borda_average(m: int) -> ScoringRule:
    return ScoringRule(borda_vector(m), ScoringScheme.AVERAGE)


def shifted_borda(m: int) -> ScoringRule:
    return ScoringRule(shifted_vector(m), ScoringScheme.SHIFTED_ROUND_DOWN_ZERO)


RULE_NAMES = (
    "borda-roundup",
    "borda-rounddown",
    "modified-borda",
    "borda-average",
    "plurality",
    "shifted-borda",
    "stv",
    "copeland",
    "copeland-halftotal",
)


def rule_from_name(name: str, m: int) -> Rule:
    """Build one of the stock rules for an m-candidate election."""
    if name == "borda-roundup":
        return borda_round_up(m)
    if name in ("borda-rounddown", "modified-borda"):
        return modified_borda(m)
    if name == "borda-average":
        return borda_average(m)
    if name == "plurality":
        return ScoringRule(plurality_vector(m), ScoringScheme.ROUND_UP)
    if name == "shifted-borda":
        return shifted_borda(m)
    if name == "stv":
        return StvRule()
    if name == "copeland":
        return CopelandRule()
    if name == "copeland-halftotal":
        return CopelandRule("half-total")
    raise ValueError(f"unknown rule {name!r}; expected one of {RULE_NAMES}")
