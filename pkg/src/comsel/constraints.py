"""Label groups, interval and dominance constraints, and their structure.

A labeling names groups of candidates.  An interval constraint bounds how
many committee members a group may contribute.  A dominance constraint
requires one group to contribute at least as many members as another.
Dominance relations form a directed graph over labels; several solvers
need its transitive closure, its cycle structure, or a forest layout.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .errors import ContractViolation, InputError


class Labeling:
    """Named candidate groups.  Names are unique; groups are nonempty."""

    def __init__(self, groups: Mapping[str, Iterable[str]]):
        named: dict[str, frozenset[str]] = {}
        for name, members in groups.items():
            if not isinstance(name, str) or not name:
                raise InputError("label names must be nonempty strings")
            group = frozenset(members)
            if not group:
                raise InputError(f"label {name!r} has no members")
            named[name] = group
        self._groups = dict(sorted(named.items()))

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(self._groups)

    def __len__(self) -> int:
        return len(self._groups)

    def __contains__(self, name: object) -> bool:
        return name in self._groups

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Labeling):
            return NotImplemented
        return self._groups == other._groups

    def __hash__(self) -> int:
        return hash(tuple(self._groups.items()))

    def __repr__(self) -> str:
        return f"Labeling({self._groups!r})"

    def members(self, name: str) -> frozenset[str]:
        try:
            return self._groups[name]
        except KeyError:
            raise InputError(f"unknown label {name!r}") from None

    @property
    def labeled(self) -> frozenset[str]:
        """Every candidate that belongs to at least one group."""
        out: set[str] = set()
        for group in self._groups.values():
            out |= group
        return frozenset(out)

    @property
    def is_disjoint(self) -> bool:
        seen: set[str] = set()
        for group in self._groups.values():
            if group & seen:
                return False
            seen |= group
        return True

    def labels_of(self, candidate: str) -> tuple[str, ...]:
        return tuple(
            name for name, group in self._groups.items() if candidate in group
        )

    def count(self, committee: Iterable[str], name: str) -> int:
        return len(self.members(name) & frozenset(committee))

    def validate_against(self, candidates: Iterable[str]) -> None:
        universe = frozenset(candidates)
        for name, group in self._groups.items():
            stray = group - universe
            if stray:
                shown = ", ".join(sorted(stray))
                raise InputError(f"label {name!r} names unknown candidates: {shown}")


@dataclass(frozen=True)
class Interval:
    """The committee must pick between lower and upper members of a label."""

    label: str
    lower: int
    upper: int

    def __post_init__(self) -> None:
        for bound in (self.lower, self.upper):
            if not isinstance(bound, int) or isinstance(bound, bool):
                raise InputError("interval bounds must be integers")
        if self.lower < 0 or self.upper < self.lower:
            raise InputError(
                f"interval for label {self.label!r} needs 0 <= lower <= upper, "
                f"got [{self.lower}, {self.upper}]"
            )


@dataclass(frozen=True)
class Dominance:
    """The committee must pick at least as many from ``over`` as from ``under``."""

    over: str
    under: str


@dataclass(frozen=True)
class Violation:
    kind: str
    message: str

    def describe(self) -> str:
        return f"{self.kind}: {self.message}"


@dataclass(frozen=True)
class ConstraintSet:
    """A labeling together with the constraints stated over it."""

    labeling: Labeling
    intervals: tuple[Interval, ...] = ()
    dominances: tuple[Dominance, ...] = ()

    def __post_init__(self) -> None:
        for interval in self.intervals:
            if interval.label not in self.labeling:
                raise InputError(f"interval names unknown label {interval.label!r}")
        for dominance in self.dominances:
            for name in (dominance.over, dominance.under):
                if name not in self.labeling:
                    raise InputError(f"dominance names unknown label {name!r}")

    @classmethod
    def build(
        cls,
        groups: Mapping[str, Iterable[str]],
        intervals: Iterable[Interval] = (),
        dominances: Iterable[Dominance] = (),
    ) -> "ConstraintSet":
        return cls(Labeling(groups), tuple(intervals), tuple(dominances))

    @classmethod
    def empty(cls) -> "ConstraintSet":
        return cls(Labeling({}))

    def validate_against(self, candidates: Iterable[str]) -> None:
        self.labeling.validate_against(candidates)


def check_committee(
    committee: Iterable[str], k: int, constraints: ConstraintSet
) -> tuple[Violation, ...]:
    """Every constraint the committee breaks, in declaration order."""
    members = frozenset(committee)
    found: list[Violation] = []
    if len(members) != k:
        found.append(
            Violation("size", f"committee has {len(members)} members, expected {k}")
        )
    labeling = constraints.labeling
    for interval in constraints.intervals:
        chosen = labeling.count(members, interval.label)
        if not interval.lower <= chosen <= interval.upper:
            found.append(
                Violation(
                    "interval",
                    f"label {interval.label!r}: {chosen} chosen, "
                    f"allowed [{interval.lower}, {interval.upper}]",
                )
            )
    for dominance in constraints.dominances:
        over = labeling.count(members, dominance.over)
        under = labeling.count(members, dominance.under)
        if over < under:
            found.append(
                Violation(
                    "dominance",
                    f"label {dominance.over!r} gives {over} members but "
                    f"label {dominance.under!r} gives {under}",
                )
            )
    return tuple(found)


def build_dominance_graph(
    labeling: Labeling, dominances: Iterable[Dominance]
) -> dict[str, frozenset[str]]:
    """Adjacency over label names; an edge points from over to under."""
    out: dict[str, set[str]] = {name: set() for name in labeling.names}
    for dominance in dominances:
        out[dominance.over].add(dominance.under)
    return {name: frozenset(targets) for name, targets in out.items()}


def transitive_closure(
    graph: Mapping[str, frozenset[str]]
) -> dict[str, frozenset[str]]:
    """Reachability along at least one edge; a node reaches itself only
    through a cycle."""
    closed: dict[str, frozenset[str]] = {}
    for start in graph:
        seen: set[str] = set()
        stack = list(graph[start])
        while stack:
            node = stack.pop()
            if node in seen:
                continue
            seen.add(node)
            stack.extend(graph[node])
        closed[start] = frozenset(seen)
    return closed


def _chain_violation(
    reach: Mapping[str, frozenset[str]]
) -> tuple[str, str, str] | None:
    # Two incomparable labels both dominating a third rule out a forest layout.
    names = sorted(reach)
    for target in names:
        above = [a for a in names if a != target and target in reach[a]]
        for i, first in enumerate(above):
            for second in above[i + 1 :]:
                if second not in reach[first] and first not in reach[second]:
                    return first, second, target
    return None


def is_tree_like(labeling: Labeling, dominances: Iterable[Dominance]) -> bool:
    """Whether, per label, all labels dominating it form a chain."""
    reach = transitive_closure(build_dominance_graph(labeling, dominances))
    return _chain_violation(reach) is None


@dataclass(frozen=True)
class DominanceForest:
    """Forest layout of the dominance relation.

    Each node is a sorted tuple of labels forced to equal counts by a
    dominance cycle.  An edge runs from a dominating node to the closest
    node it dominates, after collapsing cycles and dropping edges implied
    by transitivity.
    """

    nodes: tuple[tuple[str, ...], ...]
    parent: tuple[int | None, ...]
    children: tuple[tuple[int, ...], ...] = field(init=False)
    roots: tuple[int, ...] = field(init=False)

    def __post_init__(self) -> None:
        kids: list[list[int]] = [[] for _ in self.nodes]
        tops: list[int] = []
        for index, up in enumerate(self.parent):
            if up is None:
                tops.append(index)
            else:
                kids[up].append(index)
        object.__setattr__(self, "children", tuple(tuple(c) for c in kids))
        object.__setattr__(self, "roots", tuple(tops))

    @classmethod
    def build(
        cls, labeling: Labeling, dominances: Iterable[Dominance]
    ) -> "DominanceForest":
        graph = build_dominance_graph(labeling, dominances)
        reach = transitive_closure(graph)
        witness = _chain_violation(reach)
        if witness is not None:
            first, second, target = witness
            raise ContractViolation(
                f"dominance is not tree-like: labels {first!r} and {second!r} "
                f"both dominate {target!r} but neither dominates the other"
            )
        groups: dict[frozenset[str], None] = {}
        for name in labeling.names:
            cycle = frozenset(
                {name}
                | {other for other in reach[name] if name in reach[other]}
            )
            groups.setdefault(cycle, None)
        nodes = tuple(sorted(tuple(sorted(group)) for group in groups))
        index_of = {
            name: position
            for position, node in enumerate(nodes)
            for name in node
        }
        parent: list[int | None] = []
        for position, node in enumerate(nodes):
            representative = node[0]
            above = sorted(
                {
                    index_of[name]
                    for name in labeling.names
                    if representative in reach[name]
                }
                - {position}
            )
            chosen: int | None = None
            for candidate in above:
                lower = nodes[candidate][0]
                if all(
                    other == candidate or lower in reach[nodes[other][0]]
                    for other in above
                ):
                    chosen = candidate
                    break
            parent.append(chosen)
        return cls(nodes, tuple(parent))
