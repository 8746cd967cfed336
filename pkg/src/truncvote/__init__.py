"""Voting rules and strategic-vote solvers for top-truncated ballots.

The package evaluates elections whose voters rank only some of the
candidates, under positional scoring rules (with four truncation
schemes), single transferable vote, and Copeland. On top of that sit
exact manipulation solvers, hardness-family instance generators with
independent oracles, PrefLib data ingestion, and a deterministic
experiment harness.
"""

__version__ = "0.1.0"

from .copeland import (
    CopelandScores,
    PairwiseMatrix,
    copeland_scores,
    copeland_winner,
    pairwise_matrix,
)
from .core import (
    BallotError,
    CandidateId,
    CandidateOutOfRange,
    DuplicateCandidateInBallot,
    Election,
    EmptyRanking,
    NonPositiveWeight,
    PartialBallot,
    TieBreakPolicy,
    break_tie,
)
from .experiment import (
    ExperimentConfig,
    ResultRow,
    load_config,
    rows_to_csv,
    run_experiment,
)
from .manipulation import (
    CoalitionShapeMismatch,
    ManipulationError,
    ManipulationProblem,
    ManipulationResult,
    Outcome,
    RuleMismatch,
    SearchStats,
    StateSpaceExceeded,
    TooManyCandidates,
    complete_stv_ballots,
    exact_min_coalition,
    greedy_copeland,
    manipulate_round_up,
    verify_manipulation,
    weighted_coalition_copeland_dp,
    weighted_coalition_scoring_dp,
)
from .preflib import (
    EmptyProfile,
    MalformedHeader,
    NonPositiveCount,
    NotEnoughBallots,
    ProfileError,
    RawProfile,
    TieNotSupported,
    TruncationStats,
    UnknownCandidateIndex,
    parse_election_file,
    sample_subelection,
    serialize_profile,
    to_election,
    truncation_stats,
)
from .reductions import (
    CnfFormula,
    MalformedClause,
    OddSum,
    PartitionInstance,
    ReductionError,
    SubsetSumPairsInstance,
    TargetOutOfRange,
    gen_3sat_to_subsetsum,
    gen_partition_to_copeland,
    gen_partition_to_mbc,
    gen_subsetsum_to_borda_av,
    oracle_partition,
    oracle_subsetsum,
)
from .rules import (
    CopelandRule,
    Rule,
    ScoringRule,
    StvRule,
    borda_average,
    borda_round_up,
    modified_borda,
    rule_from_name,
    shifted_borda,
)
from .scoring import (
    SchemeVectorMismatch,
    ScoreTable,
    ScoreVector,
    ScoringScheme,
    ballot_scores,
    borda_vector,
    evaluate_scoring,
    plurality_vector,
    shifted_vector,
)
from .stv import EliminationTrace, StvRound, first_place_tally, stv_winner
