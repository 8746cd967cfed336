"""Strategic-vote solvers.

Given an election of truthful ballots and a coalition of manipulators
with fixed integer weights, these solvers look for coalition ballots
that make a preferred candidate win, with ties always broken toward that
candidate:

* :func:`manipulate_round_up`: the closed-form vote for round-up
  scoring, where ranking the preferred candidate alone is optimal.
* :func:`greedy_copeland`: the incremental single-voter construction
  for Copeland; it finds a successful partial ballot whenever one
  exists.
* :func:`exact_min_coalition`: iterative-deepening exhaustive search
  for the smallest unit-weight coalition, usable with every rule.
* :func:`weighted_coalition_scoring_dp` and
  :func:`weighted_coalition_copeland_dp`: pseudo-polynomial dynamic
  programs over cumulative scores or pairwise margins, for weighted
  coalitions with at most five candidates.

Every solver re-checks its witness through :func:`verify_manipulation`
before reporting success.
"""

from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass, replace
from enum import Enum
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .copeland import copeland_scores, pairwise_matrix
from .core import CandidateId, Election, PartialBallot, TieBreakPolicy
from .rules import CopelandRule, Rule, ScoringRule, StvRule
from .scoring import ballot_scores, evaluate_scoring

DEFAULT_STATE_CAP = 2_000_000


class ManipulationError(ValueError):
    pass


class RuleMismatch(ManipulationError):
    pass


class CoalitionShapeMismatch(ManipulationError):
    pass


class TooManyCandidates(ManipulationError):
    pass


class StateSpaceExceeded(ManipulationError):
    pass


class Outcome(Enum):
    SUCCESS = "success"
    IMPOSSIBLE = "impossible"
    TIMEOUT = "timeout"


@dataclass(frozen=True)
class SearchStats:
    """Bookkeeping attached to every result.

    ``coalition_lower_bound`` is the smallest coalition size not yet
    ruled out; on timeout it preserves what the search established.
    """

    nodes: int = 0
    elapsed: float = 0.0
    coalition_size: Optional[int] = None
    coalition_lower_bound: int = 0


@dataclass(frozen=True)
class ManipulationResult:
    outcome: Outcome
    ballots: Optional[tuple[PartialBallot, ...]]
    stats: SearchStats

    @property
    def succeeded(self) -> bool:
        return self.outcome is Outcome.SUCCESS


@dataclass(frozen=True)
class ManipulationProblem:
    """The fixed (truthful) part of an election plus a coalition to fill in.

    ``coalition`` lists the manipulators' weights; an unweighted
    coalition of c voters is ``(1,) * c``. Manipulator ballots may rank
    at most ``max_ballot_length`` candidates (defaults to all of them).
    """

    fixed: Election
    preferred: CandidateId
    rule: Rule
    coalition: tuple[int, ...]
    max_ballot_length: Optional[int] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "coalition", tuple(self.coalition))
        m = self.fixed.num_candidates
        if not 0 <= self.preferred < m:
            raise ValueError(f"preferred candidate {self.preferred} not in roster")
        if any(not isinstance(w, int) or w < 1 for w in self.coalition):
            raise CoalitionShapeMismatch("coalition weights must be positive integers")
        if self.max_ballot_length is None:
            object.__setattr__(self, "max_ballot_length", m)
        elif not 1 <= self.max_ballot_length <= m:
            raise ValueError(
                f"max_ballot_length must be in [1, {m}], got {self.max_ballot_length}"
            )
        if isinstance(self.rule, ScoringRule) and self.rule.num_candidates != m:
            raise RuleMismatch(
                f"scoring vector has length {self.rule.num_candidates} "
                f"but the election has {m} candidates"
            )

    @property
    def num_candidates(self) -> int:
        return self.fixed.num_candidates

    @property
    def policy(self) -> TieBreakPolicy:
        return TieBreakPolicy(
            favored=self.preferred, fallback=self.fixed.tie_break.fallback
        )

    def election_with(self, ballots: Iterable[PartialBallot]) -> Election:
        return self.fixed.with_ballots(ballots, tie_break=self.policy)

    def winner_with(self, ballots: Iterable[PartialBallot]) -> CandidateId:
        return self.rule.winner(self.election_with(ballots))


def verify_manipulation(
    problem: ManipulationProblem, ballots: Sequence[PartialBallot]
) -> bool:
    """True iff the coalition ballots elect the preferred candidate.

    The ballots must match the coalition's weights (as a multiset) and
    respect the length cap; otherwise :class:`CoalitionShapeMismatch` is
    raised. This is the universal oracle every solver answers to.
    """
    ballots = tuple(ballots)
    if len(ballots) != len(problem.coalition):
        raise CoalitionShapeMismatch(
            f"expected {len(problem.coalition)} manipulator ballots, got {len(ballots)}"
        )
    if sorted(b.weight for b in ballots) != sorted(problem.coalition):
        raise CoalitionShapeMismatch("ballot weights do not match the coalition")
    too_long = [b for b in ballots if len(b) > problem.max_ballot_length]
    if too_long:
        raise CoalitionShapeMismatch(
            f"ballot {too_long[0].ranking} exceeds max length {problem.max_ballot_length}"
        )
    return problem.winner_with(ballots) == problem.preferred


def _all_rankings(m: int, max_len: int) -> list[tuple[CandidateId, ...]]:
    out: list[tuple[CandidateId, ...]] = []
    for k in range(1, max_len + 1):
        out.extend(itertools.permutations(range(m), k))
    return out


def candidate_rankings(problem: ManipulationProblem) -> list[tuple[CandidateId, ...]]:
    """Manipulator rankings worth searching, pruned per rule.

    For scoring rules, any successful profile can be rewritten ballot by
    ballot so the preferred candidate comes first (prepend it, dropping
    the last entry if the ballot sits at the length cap; under all four
    schemes that never lowers the preferred candidate's contribution and
    never raises anyone else's), so only preferred-first rankings are
    kept. For Copeland the prepend works whenever the ballot is below
    the cap, but dropping a ranked candidate can raise a third
    candidate's score, so cap-length rankings without the preferred
    candidate stay in. STV offers no such guarantee and is searched over
    all rankings.
    """
    m = problem.num_candidates
    p = problem.preferred
    cap = problem.max_ballot_length
    if isinstance(problem.rule, StvRule):
        return _all_rankings(m, cap)
    rest = [c for c in range(m) if c != p]
    pool = [
        (p,) + tail
        for k in range(cap)
        for tail in itertools.permutations(rest, k)
    ]
    if isinstance(problem.rule, CopelandRule):
        pool.extend(itertools.permutations(rest, cap))
    pool.sort(key=lambda r: (len(r), r))
    return pool


def _success(
    problem: ManipulationProblem,
    ballots: Sequence[PartialBallot],
    nodes: int,
    started: float,
    lower_bound: int = 0,
) -> ManipulationResult:
    ballots = tuple(ballots)
    if not verify_manipulation(problem, ballots):  # pragma: no cover - internal check
        raise AssertionError("solver produced a witness that fails verification")
    return ManipulationResult(
        Outcome.SUCCESS,
        ballots,
        SearchStats(
            nodes=nodes,
            elapsed=time.monotonic() - started,
            coalition_size=len(ballots),
            coalition_lower_bound=lower_bound,
        ),
    )


def manipulate_round_up(problem: ManipulationProblem) -> ManipulationResult:
    """Closed-form manipulation for round-up scoring.

    Every coalition member ranks the preferred candidate alone: that
    maximizes the preferred candidate's total and hands 0 to everyone
    else, so it succeeds whenever anything does.
    """
    rule = problem.rule
    if not isinstance(rule, ScoringRule) or rule.scheme.value != "round-up":
        raise RuleMismatch("manipulate_round_up requires a round-up scoring rule")
    started = time.monotonic()
    ballots = tuple(PartialBallot((problem.preferred,), w) for w in problem.coalition)
    if verify_manipulation(problem, ballots):
        return _success(problem, ballots, nodes=1, started=started)
    return ManipulationResult(
        Outcome.IMPOSSIBLE,
        None,
        SearchStats(nodes=1, elapsed=time.monotonic() - started),
    )


def greedy_copeland(problem: ManipulationProblem) -> ManipulationResult:
    """Build a single manipulator's partial ballot for Copeland, one slot at a time.

    Start with the preferred candidate alone. While some other candidate
    out-scores the preferred one, append any candidate whose placement
    keeps its own score at or below the preferred candidate's; if no
    candidate can be placed, no ballot works at all.
    """
    if not isinstance(problem.rule, CopelandRule):
        raise RuleMismatch("greedy_copeland requires the Copeland rule")
    if len(problem.coalition) != 1:
        raise CoalitionShapeMismatch(
            "greedy_copeland handles a single manipulator (one weighted ballot)"
        )
    convention = problem.rule.convention
    weight = problem.coalition[0]
    p = problem.preferred
    started = time.monotonic()
    nodes = 0

    def scores_with(ranking: tuple[CandidateId, ...]):
        election = problem.election_with([PartialBallot(ranking, weight)])
        return copeland_scores(pairwise_matrix(election), convention)

    ranking: tuple[CandidateId, ...] = (p,)
    while True:
        nodes += 1
        scores = scores_with(ranking)
        if scores[p] >= max(scores.values()):
            return _success(
                problem, [PartialBallot(ranking, weight)], nodes, started
            )
        placed = False
        for c in range(problem.num_candidates):
            if c in ranking or len(ranking) >= problem.max_ballot_length:
                continue
            trial = ranking + (c,)
            nodes += 1
            trial_scores = scores_with(trial)
            if trial_scores[c] <= trial_scores[p]:
                ranking = trial
                placed = True
                break
        if not placed:
            return ManipulationResult(
                Outcome.IMPOSSIBLE,
                None,
                SearchStats(nodes=nodes, elapsed=time.monotonic() - started),
            )


def exact_min_coalition(
    problem: ManipulationProblem,
    limit: Optional[int] = None,
    timeout: Optional[float] = None,
    node_budget: Optional[int] = None,
) -> ManipulationResult:
    """Smallest unit-weight coalition that can elect the preferred candidate.

    Iterative deepening over coalition sizes 0, 1, ...; for each size,
    complete search over multisets of manipulator rankings (sorted to
    quotient out the symmetry between identical voters). Returns the
    first success, which is therefore minimal. ``timeout`` is wall-clock
    seconds; ``node_budget`` caps the number of evaluated profiles and
    gives fully deterministic behavior.
    """
    if any(w != 1 for w in problem.coalition):
        raise CoalitionShapeMismatch(
            "exact_min_coalition expects an unweighted coalition (all weights 1)"
        )
    if limit is None:
        limit = len(problem.coalition)
    pool = candidate_rankings(problem)
    started = time.monotonic()
    nodes = 0
    for size in range(limit + 1):
        for combo in itertools.combinations_with_replacement(pool, size):
            if node_budget is not None and nodes >= node_budget:
                return ManipulationResult(
                    Outcome.TIMEOUT,
                    None,
                    SearchStats(nodes, time.monotonic() - started, None, size),
                )
            if timeout is not None and time.monotonic() - started > timeout:
                return ManipulationResult(
                    Outcome.TIMEOUT,
                    None,
                    SearchStats(nodes, time.monotonic() - started, None, size),
                )
            nodes += 1
            ballots = tuple(PartialBallot(r, 1) for r in combo)
            if problem.winner_with(ballots) == problem.preferred:
                # Verify against the coalition actually used, not the cap.
                used = replace(problem, coalition=(1,) * size)
                return _success(used, ballots, nodes, started, lower_bound=size)
    return ManipulationResult(
        Outcome.IMPOSSIBLE,
        None,
        SearchStats(nodes, time.monotonic() - started, None, limit + 1),
    )


def _degenerate_shortcut(
    problem: ManipulationProblem, started: float
) -> Optional[ManipulationResult]:
    """Empty fixed profile or a lone candidate: everyone just votes (p)."""
    if problem.fixed.ballots and problem.num_candidates > 1:
        return None
    ballots = [PartialBallot((problem.preferred,), w) for w in problem.coalition]
    return _success(problem, ballots, nodes=0, started=started)


def _scaled_fixed_and_types(problem: ManipulationProblem):
    """Shared setup for the scoring DP: scaled fixed totals and ballot types."""
    rule = problem.rule
    assert isinstance(rule, ScoringRule)
    m = problem.num_candidates
    _, fixed_totals = evaluate_scoring(
        problem.election_with([]), rule.vector, rule.scheme
    )
    # Distinct contribution vectors; the first (shortest) ranking found
    # stands in for every ballot with the same effect.
    reps: dict[tuple[Fraction, ...], tuple[CandidateId, ...]] = {}
    for r in _all_rankings(m, problem.max_ballot_length):
        contrib = ballot_scores(PartialBallot(r, 1), rule.vector, rule.scheme)
        key = tuple(contrib[c] for c in range(m))
        reps.setdefault(key, r)
    denominators = {f.denominator for key in reps for f in key}
    denominators.update(f.denominator for f in fixed_totals.values())
    scale = math.lcm(*denominators)
    fixed_scaled = {c: int(fixed_totals[c] * scale) for c in range(m)}
    types = sorted(
        ((r, key) for key, r in reps.items()), key=lambda item: (len(item[0]), item[0])
    )
    scaled_types = [
        (r, tuple(int(v * scale) for v in key)) for r, key in types
    ]
    return fixed_scaled, scaled_types


def weighted_coalition_scoring_dp(
    problem: ManipulationProblem, state_cap: int = DEFAULT_STATE_CAP
) -> ManipulationResult:
    """Weighted-coalition manipulation of a scoring rule, by dynamic programming.

    The state is the cumulative (integer-scaled) score handed to the
    non-preferred candidates; for each state only the best achievable
    preferred-candidate score is kept, since a higher score never hurts.
    Feasible for small candidate counts, any coalition weights.
    """
    if not isinstance(problem.rule, ScoringRule):
        raise RuleMismatch("weighted_coalition_scoring_dp requires a scoring rule")
    m = problem.num_candidates
    if m > 5:
        raise TooManyCandidates(f"scoring DP supports at most 5 candidates, got {m}")
    started = time.monotonic()
    shortcut = _degenerate_shortcut(problem, started)
    if shortcut is not None:
        return shortcut
    p = problem.preferred
    others = [c for c in range(m) if c != p]
    fixed_scaled, types = _scaled_fixed_and_types(problem)

    nodes = 0
    zero = tuple(0 for _ in others)
    layers: list[dict] = []
    current: dict[tuple[int, ...], tuple[int, Optional[tuple]]] = {zero: (0, None)}
    for w in problem.coalition:
        following: dict[tuple[int, ...], tuple[int, Optional[tuple]]] = {}
        for state, (p_score, _) in current.items():
            for t_index, (_, contrib) in enumerate(types):
                nodes += 1
                new_state = tuple(
                    s + w * contrib[c] for s, c in zip(state, others)
                )
                new_p = p_score + w * contrib[p]
                known = following.get(new_state)
                if known is None or new_p > known[0]:
                    following[new_state] = (new_p, (state, t_index))
        if len(following) > state_cap:
            raise StateSpaceExceeded(
                f"scoring DP exceeded {state_cap} states; raise state_cap or "
                "shrink the instance"
            )
        layers.append(current)
        current = following

    win_state = None
    for state in sorted(current):
        p_total = fixed_scaled[p] + current[state][0]
        if all(p_total >= fixed_scaled[c] + s for s, c in zip(state, others)):
            win_state = state
            break
    if win_state is None:
        return ManipulationResult(
            Outcome.IMPOSSIBLE, None, SearchStats(nodes, time.monotonic() - started)
        )

    rankings: list[tuple[CandidateId, ...]] = []
    state = win_state
    table = current
    for i in range(len(problem.coalition) - 1, -1, -1):
        _, back = table[state]
        assert back is not None
        state, t_index = back
        rankings.append(types[t_index][0])
        table = layers[i]
    rankings.reverse()
    ballots = [
        PartialBallot(r, w) for r, w in zip(rankings, problem.coalition)
    ]
    return _success(problem, ballots, nodes, started)


def _pair_pattern(
    ranking: tuple[CandidateId, ...], pairs: list[tuple[int, int]]
) -> tuple[int, ...]:
    """Per-pair contribution of one ballot: +1, -1 or 0 on the (i, j) margin."""
    pos = {c: i for i, c in enumerate(ranking)}
    pattern = []
    for i, j in pairs:
        pi, pj = pos.get(i), pos.get(j)
        if pi is None and pj is None:
            pattern.append(0)
        elif pj is None or (pi is not None and pi < pj):
            pattern.append(1)
        else:
            pattern.append(-1)
    return tuple(pattern)


def weighted_coalition_copeland_dp(
    problem: ManipulationProblem, state_cap: int = DEFAULT_STATE_CAP
) -> ManipulationResult:
    """Weighted-coalition manipulation of Copeland, by dynamic programming.

    The state is the vector of pairwise margins (fixed votes plus the
    coalition so far), with each margin clamped to the band still
    reachable by the remaining coalition weight; beyond that band only
    the sign can matter. Ballots collapse to their per-pair contribution
    patterns.
    """
    rule = problem.rule
    if not isinstance(rule, CopelandRule):
        raise RuleMismatch("weighted_coalition_copeland_dp requires the Copeland rule")
    if rule.convention != "expressed":
        raise RuleMismatch(
            "the Copeland DP tracks expressed margins; the half-total reading "
            "is not supported here"
        )
    m = problem.num_candidates
    if m > 5:
        raise TooManyCandidates(f"Copeland DP supports at most 5 candidates, got {m}")
    started = time.monotonic()
    shortcut = _degenerate_shortcut(problem, started)
    if shortcut is not None:
        return shortcut
    p = problem.preferred
    pairs = [(i, j) for i in range(m) for j in range(i + 1, m)]

    reps: dict[tuple[int, ...], tuple[CandidateId, ...]] = {}
    for r in candidate_rankings(problem):
        reps.setdefault(_pair_pattern(r, pairs), r)
    types = sorted(
        ((r, pat) for pat, r in reps.items()), key=lambda item: (len(item[0]), item[0])
    )

    fixed_matrix = pairwise_matrix(problem.election_with([]))
    total_weight = sum(problem.coalition)

    def clamp(value: int, bound: int) -> int:
        return max(-bound, min(bound, value))

    bound0 = total_weight + 1
    start_state = tuple(clamp(fixed_matrix.margin(i, j), bound0) for i, j in pairs)

    nodes = 0
    layers: list[dict] = []
    current: dict[tuple[int, ...], Optional[tuple]] = {start_state: None}
    remaining = total_weight
    for w in problem.coalition:
        remaining -= w
        bound = remaining + 1
        following: dict[tuple[int, ...], Optional[tuple]] = {}
        for state in current:
            for t_index, (_, pattern) in enumerate(types):
                nodes += 1
                new_state = tuple(
                    clamp(s + w * d, bound) for s, d in zip(state, pattern)
                )
                if new_state not in following:
                    following[new_state] = (state, t_index)
        if len(following) > state_cap:
            raise StateSpaceExceeded(
                f"Copeland DP exceeded {state_cap} states; raise state_cap or "
                "shrink the instance"
            )
        layers.append(current)
        current = following

    def scores_of(state: tuple[int, ...]) -> dict[CandidateId, int]:
        scores = {c: 0 for c in range(m)}
        for (i, j), margin in zip(pairs, state):
            if margin > 0:
                scores[i] += 1
                scores[j] -= 1
            elif margin < 0:
                scores[i] -= 1
                scores[j] += 1
        return scores

    win_state = None
    for state in sorted(current):
        scores = scores_of(state)
        if scores[p] >= max(scores.values()):
            win_state = state
            break
    if win_state is None:
        return ManipulationResult(
            Outcome.IMPOSSIBLE, None, SearchStats(nodes, time.monotonic() - started)
        )

    rankings: list[tuple[CandidateId, ...]] = []
    state = win_state
    table = current
    for i in range(len(problem.coalition) - 1, -1, -1):
        back = table[state]
        assert back is not None
        state, t_index = back
        rankings.append(types[t_index][0])
        table = layers[i]
    rankings.reverse()
    ballots = [PartialBallot(r, w) for r, w in zip(rankings, problem.coalition)]
    return _success(problem, ballots, nodes, started)


def complete_stv_ballots(
    ballots: Iterable[PartialBallot], preferred: CandidateId, m: int
) -> list[PartialBallot]:
    """Complete manipulator ballots without hurting the preferred candidate.

    Append the preferred candidate right after the existing ranking (if
    absent), then the remaining candidates in ascending index order.
    Under STV the completed profile elects the preferred candidate
    whenever the partial one does.
    """
    completed = []
    for ballot in ballots:
        ranking = list(ballot.ranking)
        if preferred not in ranking:
            ranking.append(preferred)
        ranking.extend(c for c in range(m) if c not in ranking)
        completed.append(PartialBallot(tuple(ranking), ballot.weight))
    return completed
