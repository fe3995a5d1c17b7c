"""Transfer-based rankings: plain elimination and quota counting."""

from fractions import Fraction

import pytest

from comsel import (
    BudgetExceededError,
    ElectionProfile,
    InputError,
    stv_ranking,
    stv_rounds,
    stv_simple_all_rankings,
)


def ordering(ranking):
    # every stv ranking is strict, so tiers are singletons
    return tuple(next(iter(tier)) for tier in ranking.tiers)


def test_unknown_variant(profile_b):
    with pytest.raises(InputError, match="unknown stv variant"):
        stv_ranking(profile_b, "meek")


def test_simple_elimination_order(profile_b):
    assert ordering(stv_ranking(profile_b, "simple")) == ("a", "c", "b", "d")


def test_simple_rounds_trace(profile_b):
    rounds = stv_rounds(profile_b, "simple")
    assert [(r.action, r.candidate) for r in rounds] == [
        ("eliminate", "d"),
        ("eliminate", "b"),
        ("eliminate", "c"),
    ]
    assert rounds[0].tallies == {"a": 4, "b": 1, "c": 1, "d": 0}
    # d's single ballot moves to c once d is out... no, d had no first places;
    # tallies simply drop the removed candidate
    assert rounds[1].tallies == {"a": 4, "b": 1, "c": 1}


def test_droop_quota_round_trace(profile_b):
    rounds = stv_rounds(profile_b, "droop_gregory")
    assert (rounds[0].action, rounds[0].candidate) == ("elect", "a")
    assert rounds[0].tallies == {"a": 4, "b": 1, "c": 1, "d": 0}
    # quota is 3, so a's four supporters each keep weight 1/4
    assert rounds[1].tallies == {
        "b": Fraction(7, 4),
        "c": Fraction(5, 4),
        "d": Fraction(0),
    }
    assert (rounds[1].action, rounds[1].candidate) == ("eliminate", "d")
    assert (rounds[2].action, rounds[2].candidate) == ("eliminate", "c")


def test_droop_full_order(profile_b):
    assert ordering(stv_ranking(profile_b, "droop_gregory")) == ("a", "b", "c", "d")


def test_droop_on_landslide_elects_repeatedly():
    # nine identical voters, k=2: quota 4, a then b clear it in turn
    profile = ElectionProfile.build("abc", (("a", "b", "c"),) * 9, 2)
    rounds = stv_rounds(profile, "droop_gregory")
    assert [(r.action, r.candidate) for r in rounds] == [
        ("elect", "a"),
        ("elect", "b"),
    ]
    assert ordering(stv_ranking(profile, "droop_gregory")) == ("a", "b", "c")


def test_single_candidate_profile():
    profile = ElectionProfile.build("a", (("a",),), 1)
    assert ordering(stv_ranking(profile, "simple")) == ("a",)
    assert stv_rounds(profile, "simple") == []


def test_tie_breaks_toward_smaller_identifier():
    # b and c tie at zero first places; b must go first
    profile = ElectionProfile.build("abc", (("a", "b", "c"), ("a", "c", "b")), 1)
    assert ordering(stv_ranking(profile, "simple")) == ("a", "c", "b")


def test_all_rankings_enumerates_tie_branches(profile_b):
    worlds = stv_simple_all_rankings(profile_b)
    assert worlds == frozenset({("a", "b", "c", "d"), ("a", "c", "b", "d")})
    # the deterministic count picks one of the possible worlds
    assert ordering(stv_ranking(profile_b, "simple")) in worlds


def test_all_rankings_without_ties_is_singleton():
    profile = ElectionProfile.build(
        "abc", (("a", "b", "c"), ("a", "b", "c"), ("b", "a", "c")), 1
    )
    assert stv_simple_all_rankings(profile) == frozenset({("a", "b", "c")})


def test_all_rankings_candidate_cap():
    names = [f"c{i}" for i in range(9)]
    profile = ElectionProfile.build(names, (tuple(names),), 1)
    with pytest.raises(BudgetExceededError, match="cap"):
        stv_simple_all_rankings(profile)
