"""Tree solver: interval preprocessing and the forest dynamic program."""

import pytest

from comsel import (
    ConstraintSet,
    ContractViolation,
    Dominance,
    Interval,
    ObligatoryFirstOrder,
    ScoreOrder,
    solve_bruteforce,
    solve_tree,
)
from comsel.treedp import preprocess_intervals

SCORES = {"a": 5, "b": 1, "c": 4, "d": 3}
ORDER = ScoreOrder(SCORES)
CHAIN = ConstraintSet.build(
    {"l1": "ab", "l2": "cd"}, dominances=(Dominance("l1", "l2"),)
)
CLIQUE = ConstraintSet.build(
    {"l1": "ab", "l2": "cd"},
    dominances=(Dominance("l1", "l2"), Dominance("l2", "l1")),
)


class TestPreprocess:
    def test_upper_bounds_flow_down_the_dominance_order(self):
        constraints = ConstraintSet.build(
            {"l1": "ab", "l2": "cd"},
            intervals=(Interval("l1", 0, 1),),
            dominances=(Dominance("l1", "l2"),),
        )
        pre = preprocess_intervals("abcd", 2, constraints, ORDER)
        assert pre.reason is None
        assert pre.highs == {"l1": 1, "l2": 1}
        # each pool keeps only its best member
        assert pre.pools == {"l1": ("a",), "l2": ("c",)}
        assert pre.obligatory == frozenset()

    def test_lower_bounds_flow_up(self):
        constraints = ConstraintSet.build(
            {"l1": "ab", "l2": "cd"},
            intervals=(Interval("l2", 1, 2),),
            dominances=(Dominance("l1", "l2"),),
        )
        pre = preprocess_intervals("abcd", 2, constraints, ORDER)
        assert pre.lows == {"l1": 1, "l2": 1}
        assert pre.obligatory == frozenset({"a", "c"})

    def test_obligatory_members_outrank_everything_under_any_base(self):
        for scores in (SCORES, {"a": 0, "b": 100, "c": 1, "d": 2}):
            wrapped = ObligatoryFirstOrder(ScoreOrder(scores), ("a", "c"))
            assert wrapped.compare(("a", "c"), ("a", "b")) > 0
            assert wrapped.compare(("c", "d"), ("b", "d")) > 0

    def test_conflicting_bounds_reported(self):
        constraints = ConstraintSet.build(
            {"l": "ab"}, intervals=(Interval("l", 3, 3),)
        )
        pre = preprocess_intervals("abcd", 3, constraints, ORDER)
        assert pre.reason is not None
        assert "lower bound 3" in pre.reason

    def test_without_intervals_pools_cap_at_k(self):
        pre = preprocess_intervals("abcd", 1, CHAIN, ORDER)
        assert pre.pools == {"l1": ("a",), "l2": ("c",)}
        assert pre.lows == {"l1": 0, "l2": 0}

    def test_unlabeled_candidates_form_their_own_pool(self):
        constraints = ConstraintSet.build({"l": "ab"})
        order = ScoreOrder({"a": 5, "b": 1, "c": 4, "d": 3, "e": 6})
        pre = preprocess_intervals("abcde", 2, constraints, order)
        assert pre.unlabeled == ("e", "c")


class TestSolveTree:
    def test_chain_dominance(self):
        result = solve_tree("abcd", 2, CHAIN, ORDER)
        assert result.status == "optimal"
        assert result.committee == ("a", "c")
        assert result.score == 9
        assert result.solver == "dp"

    def test_mutual_dominance_forces_equal_counts(self):
        assert solve_tree("abcd", 2, CLIQUE, ORDER).committee == ("a", "c")
        result = solve_tree("abcd", 3, CLIQUE, ORDER)
        assert result.status == "infeasible"
        assert "no size-k committee" in result.reason

    def test_zero_committee(self):
        result = solve_tree("abcd", 0, CLIQUE, ORDER)
        assert result.status == "optimal"
        assert result.committee == ()
        assert result.score == 0

    def test_no_labels_picks_top_scorers(self):
        result = solve_tree("abcd", 2, ConstraintSet.empty(), ORDER)
        assert result.committee == ("a", "c")
        assert result.score == 9

    def test_preprocessing_infeasibility_short_circuits(self):
        constraints = ConstraintSet.build(
            {"l": "ab"}, intervals=(Interval("l", 3, 3),)
        )
        result = solve_tree("abcd", 3, constraints, ORDER)
        assert result.status == "infeasible"
        assert "lower bound" in result.reason

    def test_unmeetable_joint_lower_bounds(self):
        constraints = ConstraintSet.build(
            {"l1": "a", "l2": "b"},
            intervals=(Interval("l1", 1, 1), Interval("l2", 1, 1)),
        )
        result = solve_tree("abcd", 1, constraints, ORDER)
        assert result.status == "infeasible"
        assert "within k seats" in result.reason
        oracle = solve_bruteforce("abcd", 1, constraints, ORDER)
        assert oracle.status == "infeasible"

    def test_overlapping_labels_rejected(self):
        bad = ConstraintSet.build({"l1": "ab", "l2": "bc"})
        with pytest.raises(ContractViolation, match="disjoint"):
            solve_tree("abcd", 2, bad, ORDER)

    def test_incomparable_dominators_rejected(self):
        bad = ConstraintSet.build(
            {"l1": "a", "l2": "b", "l3": "c"},
            dominances=(Dominance("l1", "l3"), Dominance("l2", "l3")),
        )
        with pytest.raises(ContractViolation, match="not tree-like"):
            solve_tree("abcd", 2, bad, ORDER)

    def test_counts_fall_along_a_chain(self):
        scores = {
            "t1": 0, "t2": 0,
            "m1": 5, "m2": 5,
            "b1": 10, "b2": 10,
        }
        constraints = ConstraintSet.build(
            {"top": ("t1", "t2"), "mid": ("m1", "m2"), "bot": ("b1", "b2")},
            dominances=(Dominance("top", "mid"), Dominance("mid", "bot")),
        )
        order = ScoreOrder(scores)
        result = solve_tree(sorted(scores), 4, constraints, order)
        assert result.status == "optimal"
        labeling = constraints.labeling
        counts = [labeling.count(result.committee, n) for n in ("top", "mid", "bot")]
        assert counts == sorted(counts, reverse=True)
        oracle = solve_bruteforce(sorted(scores), 4, constraints, order)
        assert result.score == oracle.score == 15

    def test_interval_and_dominance_together(self):
        constraints = ConstraintSet.build(
            {"l1": "ab", "l2": "cd"},
            intervals=(Interval("l1", 0, 1),),
            dominances=(Dominance("l1", "l2"),),
        )
        result = solve_tree("abcd", 2, constraints, ORDER)
        oracle = solve_bruteforce("abcd", 2, constraints, ORDER)
        assert result.committee == oracle.committee == ("a", "c")

    def test_stats_counters_present(self):
        result = solve_tree("abcd", 2, CHAIN, ORDER)
        assert set(result.stats) == {"joins", "tables", "cells"}
        assert all(v >= 0 for v in result.stats.values())

    def test_grid_budget_is_quadratic_in_k(self):
        # every node builds at most one table and one fold grid of
        # (k+1)^2 cells each, plus one pool for unlabeled candidates
        # and one top-level fold
        from comsel import gen_random

        for seed in range(12):
            instance = gen_random(
                num_candidates=10,
                num_voters=4,
                k=4,
                num_labels=3,
                mode="disjoint",
                structure="tree_like",
                seed=seed,
            )
            scores = dict.fromkeys(instance.profile.candidates, 0)
            result = solve_tree(
                instance.profile.candidates,
                instance.profile.k,
                instance.constraints,
                ScoreOrder(scores),
            )
            k = instance.profile.k
            bound = (2 * len(instance.constraints.labeling) + 3) * (k + 1) ** 2
            assert result.stats["cells"] <= bound
