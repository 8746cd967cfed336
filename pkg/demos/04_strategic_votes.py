# Finding strategic votes: closed form, greedy, exact search, and the
# weighted dynamic programs.
#
# Run: python3 demos/04_strategic_votes.py

from truncvote import (
    CopelandRule,
    Election,
    ManipulationProblem,
    PartialBallot,
    TieBreakPolicy,
    borda_round_up,
    exact_min_coalition,
    greedy_copeland,
    manipulate_round_up,
    modified_borda,
    verify_manipulation,
    weighted_coalition_scoring_dp,
)


def show(label, result):
    if result.succeeded:
        ballots = [(b.ranking, b.weight) for b in result.ballots]
        print(f"{label}: success with {ballots} ({result.stats.nodes} nodes)")
    else:
        print(f"{label}: {result.outcome.value} ({result.stats.nodes} nodes)")


# Round-up scoring: ranking the preferred candidate alone is provably
# optimal, so manipulation is a single check.
fixed = Election(3, (PartialBallot((0, 1)),))
problem = ManipulationProblem(fixed, preferred=2, rule=borda_round_up(3), coalition=(1,))
show("round-up closed form", manipulate_round_up(problem))

# Copeland, one manipulator: grow a partial ballot greedily, placing a
# candidate only when that cannot push it past the preferred one.
fixed = Election(
    4,
    (
        PartialBallot((0, 1, 2, 3)),
        PartialBallot((1, 2, 0, 3)),
        PartialBallot((3, 2, 0, 1)),
    ),
)
problem = ManipulationProblem(fixed, 3, CopelandRule(), (1,))
show("greedy Copeland", greedy_copeland(problem))

# Exact minimum coalition: iterative deepening over coalition sizes with
# the voter symmetry quotiented out. How many bullet-voters does it take
# to drag candidate 2 past two committed blocks?
fixed = Election(
    3,
    (PartialBallot((0,), 6), PartialBallot((1,), 6)),
    TieBreakPolicy(favored=2),
)
problem = ManipulationProblem(fixed, 2, modified_borda(3), (1,) * 4)
result = exact_min_coalition(problem)
show("exact minimum coalition", result)

# Weighted coalitions: exhaustive search over weight assignments would
# blow up, but cumulative scores form a small integer state space.
problem = ManipulationProblem(fixed, 2, modified_borda(3), (1, 1, 2))
result = weighted_coalition_scoring_dp(problem)
show("weighted scoring DP", result)
print("witness verified:", verify_manipulation(problem, result.ballots))
