"""Election data model and positional scoring."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping

from .errors import InputError

Score = Fraction | float

PRESET_NAMES = ("sntv", "borda", "bloc")


def as_score(value: object) -> Score:
    """Coerce a number to a score, keeping integral values exact."""
    if isinstance(value, bool):
        raise InputError("scores must be numbers, got a boolean")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, float):
        return value
    raise InputError(f"unsupported score value {value!r}")


@dataclass(frozen=True)
class ElectionProfile:
    """Candidates, strict voter rankings (best first), and the committee size.

    Every ranking must be a permutation of the full candidate set.  The
    committee size may be zero; an empty committee is a legal outcome.
    """

    candidates: tuple[str, ...]
    voters: tuple[tuple[str, ...], ...]
    k: int

    def __post_init__(self) -> None:
        if not self.candidates:
            raise InputError("a profile needs at least one candidate")
        if len(set(self.candidates)) != len(self.candidates):
            raise InputError("candidate identifiers must be distinct")
        if not self.voters:
            raise InputError("a profile needs at least one voter")
        universe = frozenset(self.candidates)
        for index, ranking in enumerate(self.voters):
            if len(ranking) != len(universe) or frozenset(ranking) != universe:
                raise InputError(
                    f"voter {index}: ranking is not a permutation of the candidate set"
                )
        if not 0 <= self.k <= len(self.candidates):
            raise InputError(
                f"committee size {self.k} outside 0..{len(self.candidates)}"
            )

    @classmethod
    def build(
        cls,
        candidates: Iterable[str],
        voters: Iterable[Iterable[str]],
        k: int,
    ) -> "ElectionProfile":
        return cls(tuple(candidates), tuple(tuple(v) for v in voters), k)

    @property
    def num_candidates(self) -> int:
        return len(self.candidates)

    @property
    def num_voters(self) -> int:
        return len(self.voters)

    @cached_property
    def _positions(self) -> tuple[dict[str, int], ...]:
        return tuple(
            {c: i + 1 for i, c in enumerate(ranking)} for ranking in self.voters
        )

    def position(self, voter: int, candidate: str) -> int:
        """1-based rank of the candidate in the given voter's ranking."""
        try:
            return self._positions[voter][candidate]
        except KeyError:
            raise InputError(f"unknown candidate {candidate!r}") from None


@dataclass(frozen=True)
class ScoringFunction:
    """Per-position scores; entry 0 is the value of a voter's top position."""

    gamma: tuple[Score, ...]

    def __post_init__(self) -> None:
        if not self.gamma:
            raise InputError("a scoring function needs at least one position")
        object.__setattr__(self, "gamma", tuple(as_score(v) for v in self.gamma))

    @classmethod
    def sntv(cls, num_candidates: int) -> "ScoringFunction":
        return cls((1,) + (0,) * (num_candidates - 1))

    @classmethod
    def borda(cls, num_candidates: int) -> "ScoringFunction":
        return cls(tuple(range(num_candidates - 1, -1, -1)))

    @classmethod
    def bloc(cls, num_candidates: int, k: int) -> "ScoringFunction":
        if not 0 <= k <= num_candidates:
            raise InputError(f"bloc size {k} outside 0..{num_candidates}")
        return cls((1,) * k + (0,) * (num_candidates - k))

    @classmethod
    def preset(cls, name: str, num_candidates: int, k: int) -> "ScoringFunction":
        if name == "sntv":
            return cls.sntv(num_candidates)
        if name == "borda":
            return cls.borda(num_candidates)
        if name == "bloc":
            return cls.bloc(num_candidates, k)
        raise InputError(f"unknown scoring preset {name!r}")

    def __len__(self) -> int:
        return len(self.gamma)

    def score_at(self, position: int) -> Score:
        if not 1 <= position <= len(self.gamma):
            raise InputError(f"position {position} outside 1..{len(self.gamma)}")
        return self.gamma[position - 1]


def _require_match(profile: ElectionProfile, scoring: ScoringFunction) -> None:
    if len(scoring) != profile.num_candidates:
        raise InputError(
            f"scoring function has {len(scoring)} positions for "
            f"{profile.num_candidates} candidates"
        )


def score_all(profile: ElectionProfile, scoring: ScoringFunction) -> dict[str, Score]:
    """Positional score of every candidate, one sweep over the rankings."""
    _require_match(profile, scoring)
    totals: dict[str, Score] = {c: Fraction(0) for c in profile.candidates}
    for ranking in profile.voters:
        for index, candidate in enumerate(ranking):
            totals[candidate] = totals[candidate] + scoring.gamma[index]
    return totals


def score_candidate(
    profile: ElectionProfile, scoring: ScoringFunction, candidate: str
) -> Score:
    _require_match(profile, scoring)
    if candidate not in profile._positions[0]:
        raise InputError(f"unknown candidate {candidate!r}")
    total: Score = Fraction(0)
    for voter in range(profile.num_voters):
        total = total + scoring.score_at(profile.position(voter, candidate))
    return total


def score_committee(
    profile: ElectionProfile, scoring: ScoringFunction, committee: Iterable[str]
) -> Score:
    """Sum of the members' scores; the empty committee scores zero."""
    total: Score = Fraction(0)
    for candidate in sorted(set(committee)):
        total = total + score_candidate(profile, scoring, candidate)
    return total


@dataclass(frozen=True)
class SingletonRanking:
    """Weak order over candidates as indifference tiers, best tier first."""

    tiers: tuple[frozenset[str], ...]

    def __post_init__(self) -> None:
        seen: set[str] = set()
        for tier in self.tiers:
            if not tier:
                raise InputError("ranking tiers must be nonempty")
            if tier & seen:
                raise InputError("ranking tiers must be disjoint")
            seen |= tier

    @classmethod
    def from_order(cls, ordering: Iterable[str]) -> "SingletonRanking":
        return cls(tuple(frozenset((c,)) for c in ordering))

    @classmethod
    def from_scores(cls, scores: Mapping[str, Score]) -> "SingletonRanking":
        by_score: dict[Score, list[str]] = {}
        for candidate in sorted(scores):
            by_score.setdefault(scores[candidate], []).append(candidate)
        levels = sorted(by_score, reverse=True)
        return cls(tuple(frozenset(by_score[level]) for level in levels))

    @cached_property
    def _tier_index(self) -> dict[str, int]:
        return {c: i for i, tier in enumerate(self.tiers) for c in tier}

    @property
    def candidates(self) -> frozenset[str]:
        return frozenset(self._tier_index)

    def tier_of(self, candidate: str) -> int:
        try:
            return self._tier_index[candidate]
        except KeyError:
            raise InputError(f"unknown candidate {candidate!r}") from None
