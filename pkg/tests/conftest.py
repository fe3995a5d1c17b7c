"""Shared fixtures: two fixed four-candidate profiles reused across the
regression tests, graph brute-force helpers for the reduction checks, and
a terminal hook that reprints the acceptance verdict lines after the run."""

from __future__ import annotations

import itertools

import pytest

from comsel import ElectionProfile, Graph

ACCEPTANCE_LINES: list[str] = []


def has_cover(graph: Graph, size: int) -> bool:
    """Whether some vertex set of the given size touches every edge."""
    if size > graph.num_vertices:
        return False
    for chosen in itertools.combinations(range(graph.num_vertices), size):
        kept = set(chosen)
        if all(u in kept or v in kept for u, v in graph.edges):
            return True
    return False


def has_clique(graph: Graph, size: int) -> bool:
    if size > graph.num_vertices:
        return False
    adjacent = set(graph.edges)
    for chosen in itertools.combinations(range(graph.num_vertices), size):
        if all(pair in adjacent for pair in itertools.combinations(chosen, 2)):
            return True
    return False


def min_cover_size(graph: Graph) -> int:
    for size in range(graph.num_vertices + 1):
        if has_cover(graph, size):
            return size
    return graph.num_vertices


@pytest.fixture
def profile_a() -> ElectionProfile:
    """Five voters over a,b,c,d; every preset picks a different winner."""
    voters = (
        ("a", "c", "b", "d"),
        ("a", "c", "b", "d"),
        ("d", "c", "b", "a"),
        ("d", "b", "c", "a"),
        ("b", "c", "a", "d"),
    )
    return ElectionProfile.build("abcd", voters, 2)


@pytest.fixture
def profile_b() -> ElectionProfile:
    """Six voters over a,b,c,d with a round-two elimination tie."""
    voters = (
        ("a", "b", "d", "c"),
        ("a", "b", "d", "c"),
        ("a", "b", "d", "c"),
        ("a", "c", "d", "b"),
        ("b", "d", "a", "c"),
        ("c", "d", "a", "b"),
    )
    return ElectionProfile.build("abcd", voters, 2)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
