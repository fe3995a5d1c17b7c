"""Exact committee selection under label-count and dominance constraints."""

from .bruteforce import (
    OracleBudget,
    enumerate_feasible,
    existence_query,
    solve_bruteforce,
    stv_simple_all_rankings,
)
from .constraints import (
    ConstraintSet,
    Dominance,
    DominanceForest,
    Interval,
    Labeling,
    Violation,
    build_dominance_graph,
    check_committee,
    is_tree_like,
    transitive_closure,
)
from .elections import (
    ElectionProfile,
    Score,
    ScoringFunction,
    SingletonRanking,
    score_all,
    score_candidate,
    score_committee,
)
from .errors import (
    BudgetExceededError,
    ComselError,
    ContractViolation,
    InputError,
    ParseError,
)
from .generators import (
    Graph,
    format_graph,
    gen_clique_bloc,
    gen_clique_sntv,
    gen_random,
    gen_vertex_cover_dominance,
    gen_vertex_cover_intervals,
    parse_graph,
)
from .instances import (
    ORDER_KINDS,
    ElectionInstance,
    Rule,
    StvRule,
    WeaklySeparableRule,
)
from .orders import (
    CommitteeOrder,
    LeximaxOrder,
    LeximinOrder,
    ObligatoryFirstOrder,
    ScoreOrder,
    best_singletons,
    score_if_score_based,
)
from .regions import solve_region_ip
from .result import SolveResult
from .solve import (
    SOLVERS,
    build_order,
    candidate_scores,
    choose_solver,
    ranking_of,
    solve_instance,
)
from .stv import StvRound, stv_ranking, stv_rounds
from .treedp import solve_tree

__all__ = [
    "BudgetExceededError",
    "CommitteeOrder",
    "ComselError",
    "ConstraintSet",
    "ContractViolation",
    "Dominance",
    "DominanceForest",
    "ElectionInstance",
    "ElectionProfile",
    "Graph",
    "InputError",
    "Interval",
    "Labeling",
    "LeximaxOrder",
    "LeximinOrder",
    "ORDER_KINDS",
    "ObligatoryFirstOrder",
    "OracleBudget",
    "ParseError",
    "Rule",
    "SOLVERS",
    "Score",
    "ScoreOrder",
    "ScoringFunction",
    "SingletonRanking",
    "SolveResult",
    "StvRound",
    "StvRule",
    "Violation",
    "WeaklySeparableRule",
    "best_singletons",
    "build_dominance_graph",
    "build_order",
    "candidate_scores",
    "check_committee",
    "choose_solver",
    "enumerate_feasible",
    "existence_query",
    "format_graph",
    "gen_clique_bloc",
    "gen_clique_sntv",
    "gen_random",
    "gen_vertex_cover_dominance",
    "gen_vertex_cover_intervals",
    "is_tree_like",
    "parse_graph",
    "ranking_of",
    "score_all",
    "score_candidate",
    "score_committee",
    "score_if_score_based",
    "solve_bruteforce",
    "solve_instance",
    "solve_region_ip",
    "solve_tree",
    "stv_ranking",
    "stv_rounds",
    "stv_simple_all_rankings",
    "transitive_closure",
    "__version__",
]

__version__ = "0.1.0"
