"""Deterministic experiment driver over PrefLib data.

For every (file, rule, sample size t, ballot-length cap) cell the driver
samples ``trials`` sub-elections, picks a preferred candidate, runs the
exact minimum-coalition search under a per-instance budget, and
aggregates one CSV row per cell.

Determinism: per-trial seeds derive from the master seed and the cell's
sort key, never from scheduling, and rows are emitted in sorted order,
so the CSV is byte-identical across runs and worker counts. Under the
default ``nodes`` clock the search budget and the reported cost are
counted in evaluated search nodes, which keeps even the solved/timeout
split reproducible; the ``wall`` clock reports real milliseconds
instead and is only as reproducible as the hardware.
"""

from __future__ import annotations

import csv
import hashlib
import io
import logging
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Union

from .copeland import copeland_scores, pairwise_matrix
from .core import Election, TieBreakPolicy
from .manipulation import ManipulationProblem, Outcome, exact_min_coalition
from .preflib import ProfileError, RawProfile, parse_election_file, sample_subelection, to_election
from .rules import CopelandRule, Rule, ScoringRule, rule_from_name
from .scoring import evaluate_scoring
from .stv import first_place_tally, stv_winner

logger = logging.getLogger(__name__)

CSV_HEADER = "dataset,m,t,length,avg_time_ms,avg_coalition,solved,timeouts"

#: Environment variable overriding the default per-instance budget.
TIMEOUT_ENV_VAR = "TRUNCVOTE_TIMEOUT_MS"

Length = Union[int, str]


@dataclass(frozen=True)
class ExperimentConfig:
    files: tuple[str, ...]
    rules: tuple[str, ...]
    t_values: tuple[int, ...]
    lengths: tuple[Length, ...]
    trials: int = 20
    timeout_ms: int = 10_000
    seed: int = 0
    coalition_limit: int = 16
    workers: int = 1
    clock: str = "nodes"
    preferred: Optional[int] = None

    def __post_init__(self) -> None:
        if self.trials < 1:
            raise ValueError("trials must be at least 1")
        if self.timeout_ms <= 0:
            raise ValueError("timeout_ms must be positive")
        if any(t < 1 for t in self.t_values):
            raise ValueError("t values must be positive")
        for length in self.lengths:
            if length != "full" and (not isinstance(length, int) or length < 1):
                raise ValueError(f"lengths must be positive integers or 'full', got {length!r}")
        if self.clock not in ("nodes", "wall"):
            raise ValueError("clock must be 'nodes' or 'wall'")
        if self.coalition_limit < 0:
            raise ValueError("coalition_limit must be non-negative")
        if self.workers < 1:
            raise ValueError("workers must be at least 1")


@dataclass(frozen=True)
class ResultRow:
    dataset: str
    m: int
    t: int
    length: str
    avg_time_ms: Optional[float]
    avg_coalition: Optional[float]
    solved: int
    timeouts: int


_LIST_KEYS = {"files", "rules", "t_values", "lengths"}
_INT_KEYS = {"trials", "timeout_ms", "seed", "coalition_limit", "workers", "preferred"}


def load_config(text: str, base_dir: Optional[str] = None) -> ExperimentConfig:
    """Parse a flat key=value (or key: value) config file.

    Relative file paths are resolved against ``base_dir`` when given.
    List values are comma separated. ``#`` starts a comment line.
    """
    values: dict = {}
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" in line:
            key, value = line.split("=", 1)
        elif ":" in line:
            key, value = line.split(":", 1)
        else:
            raise ValueError(f"config line is not 'key = value': {line!r}")
        key = key.strip().lower()
        value = value.strip()
        if key in _LIST_KEYS:
            items = [item.strip() for item in value.split(",") if item.strip()]
            if key == "t_values":
                values[key] = tuple(int(item) for item in items)
            elif key == "lengths":
                values[key] = tuple(
                    item if item == "full" else int(item) for item in items
                )
            else:
                values[key] = tuple(items)
        elif key in _INT_KEYS:
            values[key] = int(value)
        elif key == "clock":
            values[key] = value
        else:
            raise ValueError(f"unknown config key {key!r}")
    for required in ("files", "rules", "t_values", "lengths"):
        if required not in values:
            raise ValueError(f"config is missing required key {required!r}")
    if base_dir is not None:
        values["files"] = tuple(
            str(Path(base_dir) / f) if not Path(f).is_absolute() else f
            for f in values["files"]
        )
    env_timeout = os.environ.get(TIMEOUT_ENV_VAR)
    if env_timeout is not None and "timeout_ms" not in values:
        values["timeout_ms"] = int(env_timeout)
    return ExperimentConfig(**values)


def derive_seed(master: int, *key_parts) -> int:
    """Stable per-trial seed from the master seed and the cell sort key."""
    text = "|".join([str(master)] + [str(part) for part in key_parts])
    digest = hashlib.sha256(text.encode()).digest()
    return int.from_bytes(digest[:8], "big")


def pick_preferred(election: Election, rule: Rule) -> int:
    """Weakest non-winning candidate under the rule: the hardest interesting target."""
    m = election.num_candidates
    if m == 1:
        return 0
    if isinstance(rule, ScoringRule):
        winner, totals = evaluate_scoring(election, rule.vector, rule.scheme)
        ranking = totals
    elif isinstance(rule, CopelandRule):
        scores = copeland_scores(pairwise_matrix(election), rule.convention)
        winner = rule.winner(election)
        ranking = scores
    else:
        winner, _ = stv_winner(election)
        tallies, _ = first_place_tally(election, set(election.candidates))
        ranking = tallies
    candidates = [c for c in election.candidates if c != winner]
    return min(candidates, key=lambda c: (ranking[c], -c))


@dataclass(frozen=True)
class _TrialResult:
    outcome: Outcome
    cost: float
    coalition_size: Optional[int]


def _run_trial(
    profile: RawProfile,
    dataset: str,
    rule_name: str,
    t: int,
    length: Length,
    trial: int,
    config: ExperimentConfig,
) -> _TrialResult:
    seed = derive_seed(config.seed, dataset, rule_name, t, length, trial)
    sub = sample_subelection(profile, t, seed)
    election = to_election(sub, TieBreakPolicy())
    m = election.num_candidates
    rule = rule_from_name(rule_name, m)
    cap = m if length == "full" else min(int(length), m)
    preferred = config.preferred if config.preferred is not None else pick_preferred(election, rule)
    problem = ManipulationProblem(
        fixed=election,
        preferred=preferred,
        rule=rule,
        coalition=(1,) * config.coalition_limit,
        max_ballot_length=cap,
    )
    if config.clock == "nodes":
        result = exact_min_coalition(problem, node_budget=config.timeout_ms)
        cost = float(result.stats.nodes)
    else:
        result = exact_min_coalition(problem, timeout=config.timeout_ms / 1000.0)
        cost = result.stats.elapsed * 1000.0
    return _TrialResult(result.outcome, cost, result.stats.coalition_size)


def run_experiment(config: ExperimentConfig) -> list[ResultRow]:
    """Run every cell and return rows in deterministic sorted order.

    Files that fail to parse are logged and skipped; only configuration
    errors abort the run.
    """
    profiles: dict[str, RawProfile] = {}
    num_candidates: dict[str, int] = {}
    for path in config.files:
        try:
            text = Path(path).read_text()
            profile = parse_election_file(text, source=path)
        except (OSError, ProfileError) as exc:
            logger.warning("skipping %s: %s", path, exc)
            continue
        dataset = Path(path).stem
        if dataset in profiles:  # same stem from another directory
            dataset = path
        profiles[dataset] = profile
        num_candidates[dataset] = profile.num_candidates

    tasks = [
        (dataset, rule_name, t, length, trial)
        for dataset in sorted(profiles)
        for rule_name in config.rules
        for t in config.t_values
        for length in config.lengths
        for trial in range(config.trials)
    ]

    def run(task) -> tuple[tuple, _TrialResult]:
        dataset, rule_name, t, length, trial = task
        outcome = _run_trial(
            profiles[dataset], dataset, rule_name, t, length, trial, config
        )
        return task, outcome

    results: dict[tuple, _TrialResult] = {}
    if config.workers == 1:
        for task in tasks:
            key, outcome = run(task)
            results[key] = outcome
    else:
        with ThreadPoolExecutor(max_workers=config.workers) as pool:
            for key, outcome in pool.map(run, tasks):
                results[key] = outcome

    rows = []
    def length_key(length: Length) -> tuple[int, int]:
        return (1, 0) if length == "full" else (0, int(length))

    cells = sorted(
        {(dataset, rule_name, t, length) for dataset, rule_name, t, length, _ in results},
        key=lambda cell: (cell[0], cell[1], cell[2], length_key(cell[3])),
    )
    for dataset, rule_name, t, length in cells:
        outcomes = [
            results[(dataset, rule_name, t, length, trial)]
            for trial in range(config.trials)
        ]
        solved = [o for o in outcomes if o.outcome is Outcome.SUCCESS]
        timeouts = sum(1 for o in outcomes if o.outcome is Outcome.TIMEOUT)
        avg_time = sum(o.cost for o in solved) / len(solved) if solved else None
        avg_coalition = (
            sum(o.coalition_size for o in solved) / len(solved) if solved else None
        )
        rows.append(
            ResultRow(
                dataset=f"{dataset}:{rule_name}",
                m=num_candidates[dataset],
                t=t,
                length="full" if length == "full" else str(length),
                avg_time_ms=avg_time,
                avg_coalition=avg_coalition,
                solved=len(solved),
                timeouts=timeouts,
            )
        )
    return rows


def rows_to_csv(rows: list[ResultRow]) -> str:
    """Fixed-format CSV; averages are blank when nothing solved."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_HEADER.split(","))
    for row in rows:
        writer.writerow(
            [
                row.dataset,
                row.m,
                row.t,
                row.length,
                "" if row.avg_time_ms is None else f"{row.avg_time_ms:.3f}",
                "" if row.avg_coalition is None else f"{row.avg_coalition:.3f}",
                row.solved,
                row.timeouts,
            ]
        )
    return buffer.getvalue()
