# Hardness-family generators and their independent oracles.
#
# Each generator converts a combinatorial decision problem into a
# manipulation problem with the same answer, so solving one solves the
# other. The oracles answer the source problems directly by dynamic
# programming, giving the solvers something to be checked against.
#
# Run: python3 demos/05_hardness_instances.py

import itertools

from truncvote import (
    CnfFormula,
    gen_3sat_to_subsetsum,
    gen_partition_to_copeland,
    gen_partition_to_mbc,
    oracle_partition,
    oracle_subsetsum,
    weighted_coalition_copeland_dp,
    weighted_coalition_scoring_dp,
)

# Number partitioning embeds into modified-Borda manipulation with three
# candidates: the bag becomes the coalition weights.
for bag in [(1, 1), (3, 1), (2, 3, 3, 4)]:
    problem = gen_partition_to_mbc(bag)
    result = weighted_coalition_scoring_dp(problem)
    print(
        f"bag {bag}: partition oracle {oracle_partition(bag)}, "
        f"manipulation {result.outcome.value}"
    )
    if result.succeeded:
        # ballots are reported in their shortest equivalent form, so
        # p>a stands in for p>a>b
        split_a = [b.weight for b in result.ballots if b.ranking[:2] == (2, 0)]
        split_b = [b.weight for b in result.ballots if b.ranking[:2] == (2, 1)]
        print(f"  witness splits the bag into {split_a} / {split_b}")

# The same bag embeds into 4-candidate Copeland with two fixed blocks:
print()
for bag in [(1, 1), (3, 1)]:
    result = weighted_coalition_copeland_dp(gen_partition_to_copeland(bag))
    print(f"bag {bag}: Copeland manipulation {result.outcome.value}")

# 3-literal CNF formulas turn into subset-sum instances over carry-free
# decimal numbers: satisfiable iff some sub-multiset hits the target.
print()
cnf = CnfFormula(2, ((1, 2, 2), (-1, -2, -2)))
bag, target = gen_3sat_to_subsetsum(cnf)
print(f"formula {cnf.clauses} -> bag {bag}, target {target}")
print("subset-sum oracle says satisfiable:", oracle_subsetsum(bag, target))

brute = any(
    cnf.satisfied_by(bits) for bits in itertools.product((False, True), repeat=2)
)
print("truth table agrees:", brute)
