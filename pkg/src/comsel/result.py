"""Uniform outcome record shared by every solver."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .elections import Score


@dataclass(frozen=True)
class SolveResult:
    """Outcome of one solve call.

    ``status`` is "optimal" or "infeasible".  ``committee`` is a sorted
    tuple, empty on infeasible instances.  ``score`` is filled only when
    the order is a score sum.  ``reason`` explains infeasibility;
    ``stats`` carries solver counters for tests and diagnostics.
    """

    status: str
    committee: tuple[str, ...]
    score: Score | None
    solver: str
    reason: str | None = None
    stats: Mapping[str, int] | None = None

    @property
    def is_optimal(self) -> bool:
        return self.status == "optimal"
