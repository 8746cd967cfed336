"""Reading and writing PrefLib strict-order election data.

Two on-disk layouts are accepted:

* legacy: a candidate count on the first line, then one ``index,name``
  line per candidate, a ``voters,sum,unique`` summary line, and one
  ``count,c1,c2,...`` line per distinct ballot;
* modern: ``# KEY: value`` header lines (``NUMBER ALTERNATIVES`` and
  optional ``ALTERNATIVE NAME i`` are used) followed by
  ``count: c1,c2,...`` ballot lines.

Only strict incomplete orders are supported; any grouped-candidate tie
syntax (``{...}``) is rejected. Candidate numbers are 1-based on disk
and 0-based in memory. Serialization always writes the legacy layout.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .core import Election, PartialBallot, TieBreakPolicy


class ProfileError(ValueError):
    pass


class MalformedHeader(ProfileError):
    pass


class TieNotSupported(ProfileError):
    pass


class UnknownCandidateIndex(ProfileError):
    pass


class NonPositiveCount(ProfileError):
    pass


class EmptyProfile(ProfileError):
    pass


class NotEnoughBallots(ProfileError):
    pass


@dataclass(frozen=True)
class RawProfile:
    """Parsed election data: names plus (count, ranking) ballot lines."""

    candidate_names: tuple[str, ...]
    ballots: tuple[tuple[int, tuple[int, ...]], ...]
    source: str = ""

    def __post_init__(self) -> None:
        object.__setattr__(self, "candidate_names", tuple(self.candidate_names))
        object.__setattr__(
            self, "ballots", tuple((c, tuple(r)) for c, r in self.ballots)
        )
        m = len(self.candidate_names)
        for count, ranking in self.ballots:
            if count < 1:
                raise NonPositiveCount(f"ballot count {count} must be positive")
            if len(set(ranking)) != len(ranking):
                raise ProfileError(f"ranking {ranking} repeats a candidate")
            for c in ranking:
                if not 0 <= c < m:
                    raise UnknownCandidateIndex(
                        f"candidate index {c + 1} outside 1..{m}"
                    )

    @property
    def num_candidates(self) -> int:
        return len(self.candidate_names)

    @property
    def total_count(self) -> int:
        return sum(count for count, _ in self.ballots)


@dataclass(frozen=True)
class TruncationStats:
    """How far voters rank: weighted statistics of ranking lengths."""

    median: int
    mean: float
    std: float
    complete_fraction: float
    total_count: int


def _parse_ranking_tokens(tokens: str, m: int, line: str) -> tuple[int, ...]:
    if "{" in tokens or "}" in tokens:
        raise TieNotSupported(f"tied candidates are not supported: {line!r}")
    ranking = []
    for token in tokens.split(","):
        token = token.strip()
        if not token:
            raise MalformedHeader(f"empty candidate field in {line!r}")
        try:
            c = int(token)
        except ValueError:
            raise MalformedHeader(f"bad candidate index {token!r} in {line!r}")
        if not 1 <= c <= m:
            raise UnknownCandidateIndex(f"candidate index {c} outside 1..{m}")
        ranking.append(c - 1)
    return tuple(ranking)


def _parse_modern(lines: list[str], source: str) -> RawProfile:
    num_candidates = None
    names: dict[int, str] = {}
    ballots: list[tuple[int, tuple[int, ...]]] = []
    for line in lines:
        if line.startswith("#"):
            body = line[1:].strip()
            if ":" not in body:
                continue
            key, value = (part.strip() for part in body.split(":", 1))
            key = key.upper()
            if key == "NUMBER ALTERNATIVES":
                try:
                    num_candidates = int(value)
                except ValueError:
                    raise MalformedHeader(f"bad NUMBER ALTERNATIVES value {value!r}")
            elif key.startswith("ALTERNATIVE NAME"):
                try:
                    index = int(key.rsplit(None, 1)[1])
                except (IndexError, ValueError):
                    raise MalformedHeader(f"bad header line {line!r}")
                names[index] = value
            continue
        if num_candidates is None:
            raise MalformedHeader("ballot line before NUMBER ALTERNATIVES header")
        if ":" not in line:
            raise MalformedHeader(f"expected 'count: ranking', got {line!r}")
        count_part, ranking_part = line.split(":", 1)
        try:
            count = int(count_part.strip())
        except ValueError:
            raise MalformedHeader(f"bad ballot count in {line!r}")
        if count < 1:
            raise NonPositiveCount(f"ballot count {count} must be positive")
        ballots.append(
            (count, _parse_ranking_tokens(ranking_part, num_candidates, line))
        )
    if num_candidates is None:
        raise MalformedHeader("missing NUMBER ALTERNATIVES header")
    candidate_names = tuple(
        names.get(i, f"Candidate {i}") for i in range(1, num_candidates + 1)
    )
    return RawProfile(candidate_names, tuple(ballots), source)


def _parse_legacy(lines: list[str], source: str) -> RawProfile:
    try:
        num_candidates = int(lines[0])
    except (IndexError, ValueError):
        raise MalformedHeader("first line must be the candidate count")
    if num_candidates < 1:
        raise MalformedHeader("candidate count must be positive")
    if len(lines) < num_candidates + 2:
        raise MalformedHeader("file shorter than its candidate list")
    names = []
    for line in lines[1 : num_candidates + 1]:
        if "," not in line:
            raise MalformedHeader(f"expected 'index,name', got {line!r}")
        index_part, name = line.split(",", 1)
        try:
            int(index_part)
        except ValueError:
            raise MalformedHeader(f"bad candidate index in {line!r}")
        names.append(name.strip())
    summary = lines[num_candidates + 1].split(",")
    if len(summary) != 3:
        raise MalformedHeader("summary line must be 'voters,sum,unique'")
    try:
        [int(part) for part in summary]
    except ValueError:
        raise MalformedHeader("summary line must be 'voters,sum,unique'")
    ballots = []
    for line in lines[num_candidates + 2 :]:
        if "{" in line or "}" in line:
            raise TieNotSupported(f"tied candidates are not supported: {line!r}")
        count_part, _, ranking_part = line.partition(",")
        try:
            count = int(count_part.strip())
        except ValueError:
            raise MalformedHeader(f"bad ballot count in {line!r}")
        if count < 1:
            raise NonPositiveCount(f"ballot count {count} must be positive")
        if not ranking_part.strip():
            raise MalformedHeader(f"ballot line ranks nobody: {line!r}")
        ballots.append(
            (count, _parse_ranking_tokens(ranking_part, num_candidates, line))
        )
    return RawProfile(tuple(names), tuple(ballots), source)


def parse_election_file(text: str, source: str = "") -> RawProfile:
    """Parse either PrefLib layout into a :class:`RawProfile`."""
    lines = [line.strip() for line in text.splitlines() if line.strip()]
    if not lines:
        raise MalformedHeader("empty election file")
    if lines[0].startswith("#"):
        return _parse_modern(lines, source)
    return _parse_legacy(lines, source)


def serialize_profile(profile: RawProfile) -> str:
    """Write the legacy layout; ``parse_election_file`` inverts this exactly."""
    lines = [str(profile.num_candidates)]
    for i, name in enumerate(profile.candidate_names, start=1):
        lines.append(f"{i},{name}")
    total = profile.total_count
    lines.append(f"{total},{total},{len(profile.ballots)}")
    for count, ranking in profile.ballots:
        lines.append(",".join([str(count)] + [str(c + 1) for c in ranking]))
    return "\n".join(lines) + "\n"


def to_election(profile: RawProfile, tie_break: TieBreakPolicy = TieBreakPolicy()) -> Election:
    """Each (count, ranking) line becomes one ballot of weight count."""
    return Election(
        profile.num_candidates,
        tuple(PartialBallot(ranking, count) for count, ranking in profile.ballots),
        tie_break,
    )


def truncation_stats(profile: RawProfile) -> TruncationStats:
    """Weighted statistics of how many candidates voters ranked.

    The median of an even expanded count is the lower middle value; the
    standard deviation is the population one.
    """
    if not profile.ballots:
        raise EmptyProfile("cannot compute statistics of an empty profile")
    total = profile.total_count
    by_length = sorted((len(r), count) for count, r in profile.ballots)
    median = None
    middle = (total - 1) // 2  # lower middle, 0-based
    seen = 0
    for length, count in by_length:
        seen += count
        if median is None and seen > middle:
            median = length
    assert median is not None
    mean = sum(length * count for length, count in by_length) / total
    second_moment = sum(length * length * count for length, count in by_length) / total
    std = (second_moment - mean * mean) ** 0.5
    complete = sum(
        count for count, r in profile.ballots if len(r) == profile.num_candidates
    )
    return TruncationStats(
        median=median,
        mean=mean,
        std=std,
        complete_fraction=complete / total,
        total_count=total,
    )


def sample_subelection(profile: RawProfile, t: int, seed: int) -> RawProfile:
    """Draw t ballots uniformly without replacement from the unit-expanded list.

    Deterministic for a given seed. Identical sampled rankings are
    re-aggregated, ordered by first appearance in the sample.
    """
    if t < 0:
        raise ValueError("sample size must be non-negative")
    expanded = [ranking for count, ranking in profile.ballots for _ in range(count)]
    if t > len(expanded):
        raise NotEnoughBallots(
            f"asked for {t} ballots but the profile only has {len(expanded)}"
        )
    rng = random.Random(seed)
    sampled = rng.sample(expanded, t)
    counts: dict[tuple[int, ...], int] = {}
    for ranking in sampled:
        counts[ranking] = counts.get(ranking, 0) + 1
    return RawProfile(
        profile.candidate_names,
        tuple((count, ranking) for ranking, count in counts.items()),
        profile.source,
    )
