"""Instance-level dispatch: derive the order, route to a solver, verify."""

from __future__ import annotations

from .bruteforce import OracleBudget, solve_bruteforce
from .constraints import check_committee, is_tree_like
from .elections import Score, ScoringFunction, SingletonRanking, score_all
from .errors import ContractViolation, InputError
from .instances import ElectionInstance, StvRule, WeaklySeparableRule
from .orders import CommitteeOrder, LeximaxOrder, LeximinOrder, ScoreOrder
from .regions import solve_region_ip
from .result import SolveResult
from .stv import stv_ranking
from .treedp import solve_tree

SOLVERS = ("auto", "dp", "region", "oracle")


def scoring_of(instance: ElectionInstance) -> ScoringFunction | None:
    """The positional scoring function, or None for ranking-only rules."""
    if isinstance(instance.rule, WeaklySeparableRule):
        return instance.rule.scoring_for(
            instance.profile.num_candidates, instance.k
        )
    return None


def candidate_scores(instance: ElectionInstance) -> dict[str, Score] | None:
    scoring = scoring_of(instance)
    if scoring is None:
        return None
    return score_all(instance.profile, scoring)


def ranking_of(instance: ElectionInstance) -> SingletonRanking:
    """Singleton ranking the instance's rule induces over the candidates."""
    if isinstance(instance.rule, StvRule):
        return stv_ranking(instance.profile, instance.rule.variant)
    scores = candidate_scores(instance)
    assert scores is not None
    return SingletonRanking.from_scores(scores)


def build_order(instance: ElectionInstance) -> CommitteeOrder:
    if instance.order_kind == "score":
        scores = candidate_scores(instance)
        if scores is None:
            raise ContractViolation(
                "the score order is undefined without per-candidate scores"
            )
        return ScoreOrder(scores)
    ranking = ranking_of(instance)
    if instance.order_kind == "leximax":
        return LeximaxOrder(ranking)
    return LeximinOrder(ranking)


def choose_solver(instance: ElectionInstance) -> str:
    """dp for disjoint tree-like labelings, region for plain score sums,
    oracle for everything else.  Unlabeled instances skip dp: with nothing
    to constrain, the cheaper region search already answers exactly."""
    labeling = instance.constraints.labeling
    if (
        len(labeling) > 0
        and labeling.is_disjoint
        and is_tree_like(labeling, instance.constraints.dominances)
    ):
        return "dp"
    if (
        isinstance(instance.rule, WeaklySeparableRule)
        and instance.order_kind == "score"
    ):
        return "region"
    return "oracle"


def solve_instance(
    instance: ElectionInstance,
    solver: str = "auto",
    budget: OracleBudget | None = None,
) -> SolveResult:
    """Solve and re-verify: an optimal result always passes check_committee."""
    if solver not in SOLVERS:
        raise InputError(
            f"unknown solver {solver!r}; expected one of {', '.join(SOLVERS)}"
        )
    chosen = choose_solver(instance) if solver == "auto" else solver
    candidates = instance.profile.candidates
    k = instance.k
    constraints = instance.constraints
    if chosen == "dp":
        result = solve_tree(candidates, k, constraints, build_order(instance))
    elif chosen == "region":
        scores = candidate_scores(instance)
        if scores is None or instance.order_kind != "score":
            raise ContractViolation(
                "the region solver needs a weakly separable rule under the "
                "score order"
            )
        result = solve_region_ip(candidates, k, constraints, scores)
    else:
        result = solve_bruteforce(
            candidates,
            k,
            constraints,
            build_order(instance),
            budget if budget is not None else OracleBudget(),
        )
    if result.is_optimal:
        violations = check_committee(result.committee, k, constraints)
        if violations:
            raise ContractViolation(
                "solver returned an invalid committee: "
                + "; ".join(v.describe() for v in violations)
            )
    return result
