"""Committee comparators and their keys."""

import pytest

from comsel import (
    ContractViolation,
    InputError,
    LeximaxOrder,
    LeximinOrder,
    ObligatoryFirstOrder,
    ScoreOrder,
    SingletonRanking,
    best_singletons,
    score_if_score_based,
)

FIVE = SingletonRanking.from_order("abcde")


def test_size_mismatch_is_a_contract_violation():
    order = ScoreOrder({"a": 1, "b": 2})
    with pytest.raises(ContractViolation, match="sizes 1 and 2"):
        order.compare(("a",), ("a", "b"))


def test_score_order_compares_sums():
    order = ScoreOrder({"a": 5, "b": 1, "c": 4, "d": 3})
    assert order.compare(("a", "b"), ("c", "d")) < 0
    assert order.compare(("a", "c"), ("b", "d")) > 0
    assert order.compare(("a", "b"), ("b", "a")) == 0
    # equal sums from different members are indifferent
    flat = ScoreOrder({"a": 2, "b": 1, "c": 1, "d": 2})
    assert flat.compare(("a", "b"), ("c", "d")) == 0


def test_score_order_key_join():
    order = ScoreOrder({"a": 2, "b": 3})
    assert order.join(order.key_of(("a",)), order.key_of(("b",))) == order.key_of(
        ("a", "b")
    )
    assert order.empty_key == 0


def test_score_order_unknown_candidate():
    with pytest.raises(InputError, match="unknown candidate"):
        ScoreOrder({"a": 1}).key_of(("z",))


def test_leximax_prefers_the_best_member():
    order = LeximaxOrder(FIVE)
    # {c,d} against {a,e}: a is the single best member anywhere, so it wins
    assert order.compare(("c", "d"), ("a", "e")) < 0
    assert order.compare(("a", "e"), ("c", "d")) > 0
    assert order.compare(("b", "c"), ("b", "c")) == 0


def test_leximax_falls_through_on_shared_best():
    order = LeximaxOrder(FIVE)
    assert order.compare(("a", "c"), ("a", "d")) > 0


def test_leximin_prefers_the_better_worst_member():
    order = LeximinOrder(FIVE)
    # worst members: d against e, and d sits higher
    assert order.compare(("c", "d"), ("a", "e")) > 0
    assert order.compare(("a", "d"), ("b", "c")) < 0


def test_lexi_orders_respect_ties():
    ranking = SingletonRanking((frozenset("ab"), frozenset("cd")))
    for order in (LeximaxOrder(ranking), LeximinOrder(ranking)):
        assert order.compare(("a", "c"), ("b", "d")) == 0
        assert order.compare(("a", "b"), ("b", "c")) > 0


def test_lexi_key_join_matches_union():
    order = LeximaxOrder(FIVE)
    left = order.key_of(("a", "d"))
    right = order.key_of(("b",))
    assert order.join(left, right) == order.key_of(("a", "b", "d"))


def test_obligatory_count_trumps_the_base_order():
    scores = {"a": 0, "b": 100, "c": 1}
    wrapped = ObligatoryFirstOrder(ScoreOrder(scores), ("c",))
    # b hugely outscores c, but c is obligatory
    assert wrapped.compare(("a", "c"), ("a", "b")) > 0
    assert wrapped.compare(("b", "c"), ("a", "c")) > 0  # balanced, base decides


def test_obligatory_join():
    wrapped = ObligatoryFirstOrder(ScoreOrder({"a": 1, "b": 2, "c": 4}), ("a", "b"))
    key = wrapped.join(wrapped.key_of(("a",)), wrapped.key_of(("b", "c")))
    assert key == wrapped.key_of(("a", "b", "c")) == (2, 7)
    assert wrapped.empty_key == (0, 0)


class TestBestSingletons:
    def test_picks_top_scorers_best_first(self, profile_a):
        from comsel import ScoringFunction, score_all

        order = ScoreOrder(score_all(profile_a, ScoringFunction.borda(4)))
        assert best_singletons(order, "abcd", 2) == ("c", "b")

    def test_zero_count(self):
        assert best_singletons(ScoreOrder({"a": 1}), "a", 0) == ()

    def test_ties_resolve_lexicographically(self):
        order = ScoreOrder({"a": 0, "b": 0, "c": 0})
        assert best_singletons(order, "cba", 2) == ("a", "b")

    def test_count_out_of_range(self):
        with pytest.raises(InputError, match="cannot pick"):
            best_singletons(ScoreOrder({"a": 1}), "a", 2)

    def test_no_excluded_candidate_beats_an_included_one(self):
        order = LeximinOrder(SingletonRanking((frozenset("ac"), frozenset("bd"))))
        chosen = best_singletons(order, "abcd", 2)
        left_out = set("abcd") - set(chosen)
        for kept in chosen:
            for dropped in left_out:
                assert order.compare((dropped,), (kept,)) <= 0


def test_score_extraction():
    score = ScoreOrder({"a": 3, "b": 4})
    assert score_if_score_based(score, ("a", "b")) == 7
    assert score_if_score_based(LeximaxOrder(FIVE), ("a",)) is None
    wrapped = ObligatoryFirstOrder(score, ("a",))
    assert score_if_score_based(wrapped, ("a", "b")) == 7
    lexi_wrapped = ObligatoryFirstOrder(LeximaxOrder(FIVE), ("a",))
    assert score_if_score_based(lexi_wrapped, ("a", "b")) is None
