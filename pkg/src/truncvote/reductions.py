"""Hardness-family instance generators with independent oracles.

Each generator turns a combinatorial decision problem into a coalition
manipulation problem whose answer matches it:

* :func:`gen_partition_to_mbc`: a number-partitioning bag becomes a
  3-candidate modified-Borda problem; the coalition succeeds iff the
  bag splits into two halves of equal sum.
* :func:`gen_partition_to_copeland`: the same bag becomes a 4-candidate
  Copeland problem with two blocks of fixed complete votes.
* :func:`gen_subsetsum_to_borda_av`: a subset-sum instance whose input
  splits into identical pairs becomes a 3-candidate Borda-average
  problem; success iff some sub-multiset hits the target.
* :func:`gen_3sat_to_subsetsum`: a 3-literal CNF formula becomes a
  paired subset-sum instance over carry-free decimal numbers.

The oracles answer the source problems directly by dynamic programming,
so generator output can be cross-validated against an implementation
that never sees the election machinery.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from .core import Election, PartialBallot, TieBreakPolicy
from .manipulation import ManipulationProblem
from .rules import CopelandRule, borda_average, modified_borda


class ReductionError(ValueError):
    pass


class OddSum(ReductionError):
    pass


class TargetOutOfRange(ReductionError):
    pass


class MalformedClause(ReductionError):
    pass


@dataclass(frozen=True)
class PartitionInstance:
    """A bag of positive integers whose sum 2K must split into two K-halves."""

    bag: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "bag", tuple(self.bag))
        if not self.bag:
            raise ReductionError("partition bag must not be empty")
        if any(not isinstance(v, int) or v < 1 for v in self.bag):
            raise ReductionError("partition bag entries must be positive integers")
        if sum(self.bag) % 2:
            raise OddSum(f"bag sum {sum(self.bag)} is odd; no partition can exist")

    @property
    def half(self) -> int:
        return sum(self.bag) // 2


@dataclass(frozen=True)
class SubsetSumPairsInstance:
    """Subset sum whose input splits into pairs of identical numbers."""

    pairs: tuple[tuple[int, int], ...]
    target: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "pairs", tuple(tuple(p) for p in self.pairs))
        for a, b in self.pairs:
            if a != b:
                raise ReductionError(f"pair ({a}, {b}) is not identical")
            if not isinstance(a, int) or a < 1:
                raise ReductionError("pair values must be positive integers")
        if not 0 <= self.target <= self.total:
            raise TargetOutOfRange(
                f"target {self.target} outside [0, {self.total}]"
            )

    @property
    def total(self) -> int:
        return sum(a + b for a, b in self.pairs)

    @property
    def complement(self) -> int:
        return self.total - self.target

    @property
    def flat_bag(self) -> tuple[int, ...]:
        return tuple(v for pair in self.pairs for v in pair)


@dataclass(frozen=True)
class CnfFormula:
    """A CNF formula with exactly three literals per clause.

    Literals use the DIMACS convention: ``v`` means the variable v,
    ``-v`` its negation, with ``1 <= v <= num_vars``.
    """

    num_vars: int
    clauses: tuple[tuple[int, int, int], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "clauses", tuple(tuple(c) for c in self.clauses))
        if self.num_vars < 0:
            raise MalformedClause("num_vars must be non-negative")
        for clause in self.clauses:
            if len(clause) != 3:
                raise MalformedClause(f"clause {clause} must have exactly 3 literals")
            for lit in clause:
                if not isinstance(lit, int) or lit == 0 or abs(lit) > self.num_vars:
                    raise MalformedClause(f"literal {lit} out of range in {clause}")

    def satisfied_by(self, assignment: Sequence[bool]) -> bool:
        return all(
            any(assignment[abs(l) - 1] == (l > 0) for l in clause)
            for clause in self.clauses
        )


def _as_partition(instance: Union[PartitionInstance, Iterable[int]]) -> PartitionInstance:
    if isinstance(instance, PartitionInstance):
        return instance
    return PartitionInstance(tuple(instance))


def gen_partition_to_mbc(
    instance: Union[PartitionInstance, Iterable[int]]
) -> ManipulationProblem:
    """Partition bag -> modified-Borda manipulation over candidates a=0, b=1, p=2.

    Fixed singleton votes of weight 3K for a and for b; the coalition
    carries the bag weights and wants p. Splitting the bag into the two
    complete votes p>a>b and p>b>a ties everything at 4K exactly when a
    perfect partition exists.
    """
    inst = _as_partition(instance)
    k = inst.half
    fixed = Election(
        3,
        (PartialBallot((0,), 3 * k), PartialBallot((1,), 3 * k)),
        TieBreakPolicy(favored=2),
    )
    return ManipulationProblem(
        fixed=fixed,
        preferred=2,
        rule=modified_borda(3),
        coalition=inst.bag,
        max_ballot_length=3,
    )


def gen_partition_to_copeland(
    instance: Union[PartitionInstance, Iterable[int]]
) -> ManipulationProblem:
    """Partition bag -> Copeland manipulation over a=0, b=1, c=2, p=3.

    Two fixed blocks of weight K vote a>b>c>p and a>c>b>p; the coalition
    carries the bag weights and wants p.
    """
    inst = _as_partition(instance)
    k = inst.half
    fixed = Election(
        4,
        (PartialBallot((0, 1, 2, 3), k), PartialBallot((0, 2, 1, 3), k)),
        TieBreakPolicy(favored=3),
    )
    return ManipulationProblem(
        fixed=fixed,
        preferred=3,
        rule=CopelandRule(),
        coalition=inst.bag,
        max_ballot_length=4,
    )


def gen_subsetsum_to_borda_av(instance: SubsetSumPairsInstance) -> ManipulationProblem:
    """Paired subset sum -> Borda-average manipulation over a=0, b=1, p=2.

    One complete vote of weight t1 for a>b>p and one of weight t2 = t-t1
    for b>a>p; each manipulator carries a pair's combined weight.
    Zero-weight fixed votes (t1 of 0 or t) are simply omitted.
    """
    t1 = instance.target
    t2 = instance.complement
    fixed_ballots = []
    if t1 > 0:
        fixed_ballots.append(PartialBallot((0, 1, 2), t1))
    if t2 > 0:
        fixed_ballots.append(PartialBallot((1, 0, 2), t2))
    fixed = Election(3, tuple(fixed_ballots), TieBreakPolicy(favored=2))
    return ManipulationProblem(
        fixed=fixed,
        preferred=2,
        rule=borda_average(3),
        coalition=tuple(a + b for a, b in instance.pairs),
        max_ballot_length=3,
    )


def gen_3sat_to_subsetsum(cnf: CnfFormula) -> tuple[tuple[int, ...], int]:
    """3-literal CNF -> (bag, target) subset sum over carry-free decimal numbers.

    Every number has n variable digits followed by m clause digits. For
    each variable two identical numbers mark "true" (digit i set, plus a
    clause digit per clause containing the positive literal) and two
    mark "false" (likewise for the negation); each clause adds two
    identical slack numbers. The target has every variable digit 1 and
    every clause digit 3. No digit column can exceed 5, so decimal
    arithmetic is carry-free and plain integers are exact.
    """
    n = cnf.num_vars
    m = len(cnf.clauses)

    def number(variable_digit: int | None, clause_digits: Iterable[int]) -> int:
        value = 0
        if variable_digit is not None:
            value += 10 ** (m + n - variable_digit)
        for j in clause_digits:
            value += 10 ** (m - j)
        return value

    bag: list[int] = []
    for i in range(1, n + 1):
        positive = number(i, (j for j, c in enumerate(cnf.clauses, 1) if i in c))
        negative = number(i, (j for j, c in enumerate(cnf.clauses, 1) if -i in c))
        bag.extend((positive, positive, negative, negative))
    for j in range(1, m + 1):
        slack = number(None, (j,))
        bag.extend((slack, slack))
    target = sum(10 ** (m + n - i) for i in range(1, n + 1)) + sum(
        3 * 10 ** (m - j) for j in range(1, m + 1)
    )
    return tuple(bag), target


def oracle_subsetsum(bag: Iterable[int], target: int) -> bool:
    """True iff some sub-multiset of ``bag`` sums to ``target`` (bitset DP)."""
    if target < 0:
        raise ValueError("target must be non-negative")
    reachable = 1
    mask = (1 << (target + 1)) - 1
    for value in bag:
        if not isinstance(value, int) or value < 1:
            raise ValueError("bag entries must be positive integers")
        if value <= target:
            reachable |= reachable << value
            reachable &= mask
    return bool((reachable >> target) & 1)


def oracle_partition(bag: Iterable[int]) -> bool:
    """True iff the bag splits into two halves of equal sum."""
    bag = tuple(bag)
    total = sum(bag)
    if total % 2:
        return False
    return oracle_subsetsum(bag, total // 2)
