"""Command-line front end.

Subcommands: ``evaluate`` (winner and scores or trace), ``manipulate``
(find coalition ballots or certify impossibility), ``reduce``
(materialize hardness-family instances as election files), ``stats``
(ballot-truncation statistics), and ``experiment`` (the CSV benchmark
driver).

Candidate numbers on the command line and in all output are 1-based, to
match the on-disk PrefLib convention. Exit status: 0 on success
(including an explicit "impossible" answer), 1 on domain failures, 2 on
usage errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .core import BallotError, PartialBallot, TieBreakPolicy
from .copeland import copeland_winner, pairwise_matrix
from .experiment import load_config, rows_to_csv, run_experiment
from .manipulation import (
    ManipulationError,
    ManipulationProblem,
    ManipulationResult,
    Outcome,
    exact_min_coalition,
    greedy_copeland,
    manipulate_round_up,
    weighted_coalition_copeland_dp,
    weighted_coalition_scoring_dp,
)
from .preflib import (
    ProfileError,
    RawProfile,
    parse_election_file,
    serialize_profile,
    to_election,
    truncation_stats,
)
from .reductions import (
    CnfFormula,
    ReductionError,
    SubsetSumPairsInstance,
    gen_3sat_to_subsetsum,
    gen_partition_to_copeland,
    gen_partition_to_mbc,
    gen_subsetsum_to_borda_av,
)
from .rules import RULE_NAMES, CopelandRule, ScoringRule, StvRule, rule_from_name
from .scoring import evaluate_scoring
from .stv import stv_winner


def _load_profile(path: str) -> RawProfile:
    return parse_election_file(Path(path).read_text(), source=path)


def _parse_int_list(text: str) -> tuple[int, ...]:
    return tuple(int(part) for part in text.split(",") if part.strip())


def _length_arg(text: str):
    if text == "full":
        return text
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer or 'full', got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError("ballot length cap must be positive")
    return value


def _format_ballot(ballot: PartialBallot) -> str:
    return ",".join([str(ballot.weight)] + [str(c + 1) for c in ballot.ranking])


def cmd_evaluate(args: argparse.Namespace) -> int:
    profile = _load_profile(args.file)
    favored = args.favored - 1 if args.favored is not None else None
    election = to_election(profile, TieBreakPolicy(favored=favored))
    rule = rule_from_name(args.rule, election.num_candidates)
    if isinstance(rule, ScoringRule):
        winner, table = evaluate_scoring(election, rule.vector, rule.scheme)
        print(f"winner: {winner + 1} ({profile.candidate_names[winner]})")
        for c in election.candidates:
            print(f"{c + 1},{profile.candidate_names[c]},{table[c]}")
    elif isinstance(rule, StvRule):
        winner, trace = stv_winner(election)
        print(f"winner: {winner + 1} ({profile.candidate_names[winner]})")
        print(trace.format())
    else:
        winner, scores = copeland_winner(election, rule.convention)
        print(f"winner: {winner + 1} ({profile.candidate_names[winner]})")
        for c in election.candidates:
            print(f"{c + 1},{profile.candidate_names[c]},{scores[c]}")
        print("pairwise matrix:")
        print(pairwise_matrix(election).format())
    return 0


def _solve(problem: ManipulationProblem, args: argparse.Namespace) -> ManipulationResult:
    solver = args.solver
    if solver == "auto":
        rule = problem.rule
        if isinstance(rule, ScoringRule) and rule.scheme.value == "round-up":
            solver = "roundup"
        elif isinstance(rule, CopelandRule) and len(problem.coalition) == 1:
            solver = "greedy"
        elif all(w == 1 for w in problem.coalition):
            solver = "exact"
        elif isinstance(rule, ScoringRule):
            solver = "scoring-dp"
        elif isinstance(rule, CopelandRule):
            solver = "copeland-dp"
        else:
            solver = "exact"
    if solver == "roundup":
        return manipulate_round_up(problem)
    if solver == "greedy":
        return greedy_copeland(problem)
    if solver == "scoring-dp":
        return weighted_coalition_scoring_dp(problem)
    if solver == "copeland-dp":
        return weighted_coalition_copeland_dp(problem)
    timeout = args.timeout_ms / 1000.0 if args.timeout_ms else None
    return exact_min_coalition(problem, timeout=timeout)


def cmd_manipulate(args: argparse.Namespace) -> int:
    profile = _load_profile(args.file)
    election = to_election(profile)
    m = election.num_candidates
    rule = rule_from_name(args.rule, m)
    if args.weights is not None:
        coalition = _parse_int_list(args.weights)
    else:
        coalition = (1,) * args.coalition
    cap = m if args.max_length == "full" else min(args.max_length, m)
    problem = ManipulationProblem(
        fixed=election,
        preferred=args.preferred - 1,
        rule=rule,
        coalition=coalition,
        max_ballot_length=cap,
    )
    result = _solve(problem, args)
    if result.outcome is Outcome.SUCCESS:
        print("success")
        assert result.ballots is not None
        for ballot in result.ballots:
            print(_format_ballot(ballot))
        print(
            f"stats: coalition_size={result.stats.coalition_size} "
            f"nodes={result.stats.nodes} elapsed_s={result.stats.elapsed:.3f}"
        )
        return 0
    if result.outcome is Outcome.IMPOSSIBLE:
        print("impossible")
        print(f"stats: nodes={result.stats.nodes} elapsed_s={result.stats.elapsed:.3f}")
        return 0
    print("timeout")
    print(
        f"stats: nodes={result.stats.nodes} "
        f"coalition_lower_bound={result.stats.coalition_lower_bound}"
    )
    return 1


def _profile_from_problem(problem: ManipulationProblem, names: list[str]) -> RawProfile:
    ballots = tuple((b.weight, b.ranking) for b in problem.fixed.ballots)
    return RawProfile(tuple(names), ballots)


def cmd_reduce(args: argparse.Namespace) -> int:
    if args.construction == "3sat-subsetsum":
        if args.clauses is None or args.vars is None:
            raise ValueError("3sat-subsetsum needs --vars and --clauses")
        clauses = tuple(
            tuple(int(lit) for lit in clause.split(","))
            for clause in args.clauses.split(";")
            if clause.strip()
        )
        bag, target = gen_3sat_to_subsetsum(CnfFormula(args.vars, clauses))
        print("bag: " + ",".join(str(v) for v in bag))
        print(f"target: {target}")
        return 0

    if args.construction == "partition-mbc":
        if args.bag is None:
            raise ValueError("partition-mbc needs --bag")
        problem = gen_partition_to_mbc(_parse_int_list(args.bag))
        names = ["a", "b", "p"]
    elif args.construction == "partition-copeland":
        if args.bag is None:
            raise ValueError("partition-copeland needs --bag")
        problem = gen_partition_to_copeland(_parse_int_list(args.bag))
        names = ["a", "b", "c", "p"]
    else:
        if args.pairs is None or args.t1 is None:
            raise ValueError("subsetsum-borda-av needs --pairs and --t1")
        pairs = tuple(
            tuple(int(v) for v in pair.split(","))
            for pair in args.pairs.split(";")
            if pair.strip()
        )
        problem = gen_subsetsum_to_borda_av(SubsetSumPairsInstance(pairs, args.t1))
        names = ["a", "b", "p"]

    profile = _profile_from_problem(problem, names)
    election_path = Path(f"{args.out}.soi")
    weights_path = Path(f"{args.out}.weights")
    election_path.write_text(serialize_profile(profile))
    weights_path.write_text(",".join(str(w) for w in problem.coalition) + "\n")
    print(f"election: {election_path}")
    print(f"coalition weights: {weights_path}")
    print(f"preferred candidate: {problem.preferred + 1}")
    return 0


def cmd_stats(args: argparse.Namespace) -> int:
    profile = _load_profile(args.file)
    stats = truncation_stats(profile)
    if args.format == "csv":
        print("median,mean,std,complete_fraction,total_ballots")
        print(
            f"{stats.median},{stats.mean:.6f},{stats.std:.6f},"
            f"{stats.complete_fraction:.6f},{stats.total_count}"
        )
    else:
        print(f"median: {stats.median}")
        print(f"mean: {stats.mean:.6f}")
        print(f"std: {stats.std:.6f}")
        print(f"complete_fraction: {stats.complete_fraction:.6f}")
        print(f"total_ballots: {stats.total_count}")
    return 0


def cmd_experiment(args: argparse.Namespace) -> int:
    config_path = Path(args.config)
    config = load_config(config_path.read_text(), base_dir=str(config_path.parent))
    if args.workers is not None:
        from dataclasses import replace

        config = replace(config, workers=args.workers)
    csv_text = rows_to_csv(run_experiment(config))
    if args.out:
        Path(args.out).write_text(csv_text)
    else:
        sys.stdout.write(csv_text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="truncvote",
        description="Voting rules and strategic-vote solvers for partial ballots.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("evaluate", help="winner and scores or trace for a file")
    p_eval.add_argument("file")
    p_eval.add_argument("--rule", required=True, choices=RULE_NAMES)
    p_eval.add_argument("--favored", type=int, help="1-based candidate favored in ties")
    p_eval.set_defaults(func=cmd_evaluate)

    p_man = sub.add_parser("manipulate", help="find coalition ballots electing a candidate")
    p_man.add_argument("file")
    p_man.add_argument("--rule", required=True, choices=RULE_NAMES)
    p_man.add_argument("--preferred", type=int, required=True, help="1-based candidate")
    group = p_man.add_mutually_exclusive_group()
    group.add_argument("--coalition", type=int, default=1, help="number of unit-weight manipulators")
    group.add_argument("--weights", help="comma-separated manipulator weights")
    p_man.add_argument(
        "--max-length", type=_length_arg, default="full", help="ballot length cap or 'full'"
    )
    p_man.add_argument(
        "--solver",
        choices=("auto", "exact", "roundup", "greedy", "scoring-dp", "copeland-dp"),
        default="auto",
    )
    p_man.add_argument("--timeout-ms", type=int, help="wall-clock budget for exact search")
    p_man.set_defaults(func=cmd_manipulate)

    p_red = sub.add_parser("reduce", help="materialize a hardness-family instance")
    p_red.add_argument(
        "construction",
        choices=("partition-mbc", "partition-copeland", "subsetsum-borda-av", "3sat-subsetsum"),
    )
    p_red.add_argument("--bag", help="comma-separated positive integers")
    p_red.add_argument("--pairs", help="semicolon-separated identical pairs, e.g. '1,1;2,2'")
    p_red.add_argument("--t1", type=int, help="subset-sum target")
    p_red.add_argument("--vars", type=int, help="number of CNF variables")
    p_red.add_argument("--clauses", help="semicolon-separated clauses, e.g. '1,-2,3;2,3,-1'")
    p_red.add_argument("--out", default="instance", help="output path prefix")
    p_red.set_defaults(func=cmd_reduce)

    p_stats = sub.add_parser("stats", help="ballot-truncation statistics for a file")
    p_stats.add_argument("file")
    p_stats.add_argument("--format", choices=("kv", "csv"), default="kv")
    p_stats.set_defaults(func=cmd_stats)

    p_exp = sub.add_parser("experiment", help="run the CSV benchmark driver")
    p_exp.add_argument("config")
    p_exp.add_argument("--out", help="write CSV here instead of stdout")
    p_exp.add_argument("--workers", type=int, help="override the config worker count")
    p_exp.set_defaults(func=cmd_experiment)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (BallotError, ProfileError, ManipulationError, ReductionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
