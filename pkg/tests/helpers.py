"""Shared brute-force oracles and small random instance generators.

Everything here enumerates without any of the library's search pruning,
so tests can cross-check solver results against ground truth.
"""

from __future__ import annotations

import itertools
import random
from typing import Optional

from truncvote import (
    CnfFormula,
    Election,
    ManipulationProblem,
    PartialBallot,
    TieBreakPolicy,
)


def all_rankings(m: int, max_len: Optional[int] = None) -> list[tuple[int, ...]]:
    """Every strict ranking of 1..max_len candidates out of m."""
    if max_len is None:
        max_len = m
    out = []
    for k in range(1, max_len + 1):
        out.extend(itertools.permutations(range(m), k))
    return out


def manipulation_exists(problem: ManipulationProblem) -> bool:
    """Exhaustively try every assignment of rankings to the coalition."""
    rankings = all_rankings(problem.num_candidates, problem.max_ballot_length)
    for assignment in itertools.product(rankings, repeat=len(problem.coalition)):
        ballots = [
            PartialBallot(r, w) for r, w in zip(assignment, problem.coalition)
        ]
        if problem.winner_with(ballots) == problem.preferred:
            return True
    return False


def min_coalition_brute(problem: ManipulationProblem, limit: int) -> Optional[int]:
    """Smallest unit-weight coalition size that works, by unpruned search."""
    rankings = all_rankings(problem.num_candidates, problem.max_ballot_length)
    for size in range(limit + 1):
        for combo in itertools.combinations_with_replacement(rankings, size):
            ballots = [PartialBallot(r, 1) for r in combo]
            if problem.winner_with(ballots) == problem.preferred:
                return size
    return None


def successful_single_ballots(problem: ManipulationProblem) -> list[tuple[int, ...]]:
    """All single-manipulator rankings that elect the preferred candidate."""
    assert len(problem.coalition) == 1
    weight = problem.coalition[0]
    out = []
    for r in all_rankings(problem.num_candidates, problem.max_ballot_length):
        if problem.winner_with([PartialBallot(r, weight)]) == problem.preferred:
            out.append(r)
    return out


def random_ballot(rng: random.Random, m: int, max_weight: int = 3) -> PartialBallot:
    k = rng.randint(1, m)
    ranking = tuple(rng.sample(range(m), k))
    return PartialBallot(ranking, rng.randint(1, max_weight))


def random_election(
    rng: random.Random,
    m: int,
    max_ballots: int = 4,
    max_weight: int = 3,
    tie_break: Optional[TieBreakPolicy] = None,
) -> Election:
    n = rng.randint(0, max_ballots)
    ballots = tuple(random_ballot(rng, m, max_weight) for _ in range(n))
    return Election(m, ballots, tie_break or TieBreakPolicy())


def truth_table_satisfiable(cnf: CnfFormula) -> bool:
    if cnf.num_vars == 0:
        return len(cnf.clauses) == 0
    for bits in itertools.product((False, True), repeat=cnf.num_vars):
        if cnf.satisfied_by(bits):
            return True
    return False
