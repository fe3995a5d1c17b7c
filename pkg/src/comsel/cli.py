"""Command-line interface and the JSON instance format.

Exit codes: 0 for an optimal committee or a passing check, 1 for an
infeasible instance or a failing check, 2 for any contract, budget, or
input problem.  Parse errors carry a short machine-readable code printed
as ``error[code]: message`` on stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any, Sequence

from .bruteforce import OracleBudget
from .constraints import ConstraintSet, Dominance, Interval, check_committee
from .elections import ElectionProfile, Score
from .errors import (
    BudgetExceededError,
    ComselError,
    ContractViolation,
    InputError,
    ParseError,
)
from .generators import (
    MODES,
    STRUCTURES,
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
    StvRule,
    WeaklySeparableRule,
)
from .result import SolveResult
from .solve import SOLVERS, solve_instance
from .stv import VARIANTS

_TOP_FIELDS = frozenset(
    {"candidates", "voters", "k", "labels", "constraints", "rule", "order",
     "reference"}
)


def _require(doc: dict, field: str) -> Any:
    if field not in doc:
        raise ParseError("missing-field", f"missing field {field!r}")
    return doc[field]


def _string_list(value: Any, field: str) -> list[str]:
    if not isinstance(value, list) or not all(
        isinstance(item, str) for item in value
    ):
        raise ParseError(
            "malformed-field", f"field {field!r} must be a list of strings"
        )
    return value


def _parse_profile(doc: dict) -> ElectionProfile:
    candidates = _string_list(_require(doc, "candidates"), "candidates")
    if not candidates:
        raise ParseError("empty-profile", "field 'candidates' is empty")
    if len(set(candidates)) != len(candidates):
        dupe = next(c for c in candidates if candidates.count(c) > 1)
        raise ParseError("duplicate-candidate", f"candidate {dupe!r} repeats")
    voters = _require(doc, "voters")
    if not isinstance(voters, list):
        raise ParseError("malformed-field", "field 'voters' must be a list")
    if not voters:
        raise ParseError("empty-profile", "field 'voters' is empty")
    universe = set(candidates)
    rankings = []
    for index, ranking in enumerate(voters):
        entry = _string_list(ranking, f"voters[{index}]")
        if len(entry) != len(universe) or set(entry) != universe:
            raise ParseError(
                "non-permutation-ranking",
                f"non-permutation ranking, voter index {index}",
            )
        rankings.append(tuple(entry))
    k = _require(doc, "k")
    if not isinstance(k, int) or isinstance(k, bool):
        raise ParseError("invalid-k", "field 'k' must be an integer")
    if not 0 <= k <= len(candidates):
        raise ParseError(
            "invalid-k", f"committee size {k} outside 0..{len(candidates)}"
        )
    return ElectionProfile(tuple(candidates), tuple(rankings), k)


def _parse_labels(doc: dict, universe: set[str]) -> dict[str, tuple[str, ...]]:
    raw = doc.get("labels", {})
    if not isinstance(raw, dict):
        raise ParseError("malformed-field", "field 'labels' must be an object")
    groups: dict[str, tuple[str, ...]] = {}
    for name in raw:
        if not isinstance(name, str) or not name:
            raise ParseError("empty-label", "label names must be nonempty strings")
        members = _string_list(raw[name], f"labels[{name!r}]")
        if not members:
            raise ParseError("empty-label", f"label {name!r} has no members")
        for member in members:
            if member not in universe:
                raise ParseError(
                    "unknown-candidate",
                    f"label {name!r} names unknown candidate {member!r}",
                )
        groups[name] = tuple(members)
    return groups


def _parse_constraints(
    doc: dict, labels: dict[str, tuple[str, ...]]
) -> tuple[list[Interval], list[Dominance]]:
    raw = doc.get("constraints", [])
    if not isinstance(raw, list):
        raise ParseError("malformed-field", "field 'constraints' must be a list")
    intervals: list[Interval] = []
    dominances: list[Dominance] = []
    for position, entry in enumerate(raw):
        where = f"constraints[{position}]"
        if not isinstance(entry, dict):
            raise ParseError("invalid-constraint", f"{where} must be an object")
        kind = entry.get("type")
        if kind == "interval":
            extra = sorted(set(entry) - {"type", "label", "min", "max"})
            if extra or not {"label", "min", "max"} <= set(entry):
                raise ParseError(
                    "invalid-constraint",
                    f"{where} needs exactly the fields type, label, min, max",
                )
            label = entry["label"]
            if label not in labels:
                raise ParseError(
                    "unknown-label", f"{where} names unknown label {label!r}"
                )
            low, high = entry["min"], entry["max"]
            for bound in (low, high):
                if not isinstance(bound, int) or isinstance(bound, bool):
                    raise ParseError(
                        "invalid-interval-bounds",
                        f"{where} bounds must be integers",
                    )
            if low < 0 or high < low:
                raise ParseError(
                    "invalid-interval-bounds",
                    f"invalid interval bounds [{low}, {high}] in {where}",
                )
            intervals.append(Interval(label, low, high))
        elif kind == "dominance":
            extra = sorted(set(entry) - {"type", "over", "under"})
            if extra or not {"over", "under"} <= set(entry):
                raise ParseError(
                    "invalid-constraint",
                    f"{where} needs exactly the fields type, over, under",
                )
            for side in ("over", "under"):
                name = entry[side]
                if name not in labels:
                    raise ParseError(
                        "unknown-label",
                        f"{where} names unknown label {name!r}",
                    )
            dominances.append(Dominance(entry["over"], entry["under"]))
        else:
            raise ParseError(
                "invalid-constraint",
                f"{where} has unsupported type {kind!r}",
            )
    return intervals, dominances


def _parse_rule(doc: dict, num_candidates: int) -> WeaklySeparableRule | StvRule:
    raw = _require(doc, "rule")
    if not isinstance(raw, dict):
        raise ParseError("malformed-field", "field 'rule' must be an object")
    kind = raw.get("type")
    if kind == "weakly_separable":
        if set(raw) != {"type", "gamma"}:
            raise ParseError(
                "invalid-rule",
                "a weakly_separable rule needs exactly the fields type, gamma",
            )
        gamma = raw["gamma"]
        if isinstance(gamma, str):
            try:
                return WeaklySeparableRule(gamma)
            except InputError as exc:
                raise ParseError("invalid-gamma", str(exc)) from None
        if not isinstance(gamma, list):
            raise ParseError(
                "invalid-gamma", "field 'gamma' must be a preset name or a list"
            )
        for value in gamma:
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                raise ParseError(
                    "invalid-gamma", "scoring vector entries must be numbers"
                )
        if len(gamma) != num_candidates:
            raise ParseError(
                "invalid-gamma",
                f"scoring vector has {len(gamma)} entries for "
                f"{num_candidates} candidates",
            )
        return WeaklySeparableRule(tuple(gamma))
    if kind == "stv":
        if set(raw) != {"type", "variant"}:
            raise ParseError(
                "invalid-rule",
                "an stv rule needs exactly the fields type, variant",
            )
        variant = raw["variant"]
        if variant not in VARIANTS:
            raise ParseError(
                "invalid-rule", f"unknown stv variant {variant!r}"
            )
        return StvRule(variant)
    raise ParseError("invalid-rule", f"unsupported rule type {kind!r}")


def parse_instance(text: str) -> ElectionInstance:
    """Validate a JSON instance document, naming the first violation."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError("malformed-json", f"not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise ParseError("malformed-json", "the top level must be an object")
    unknown = sorted(set(doc) - _TOP_FIELDS)
    if unknown:
        raise ParseError("unknown-field", f"unknown field {unknown[0]!r}")
    profile = _parse_profile(doc)
    universe = set(profile.candidates)
    labels = _parse_labels(doc, universe)
    intervals, dominances = _parse_constraints(doc, labels)
    rule = _parse_rule(doc, profile.num_candidates)
    order = doc.get("order", "score")
    if order not in ORDER_KINDS:
        raise ParseError("invalid-order", f"unknown order {order!r}")
    if order == "score" and isinstance(rule, StvRule):
        raise ParseError(
            "order-rule-mismatch",
            "the score order cannot pair with an stv rule",
        )
    reference: tuple[str, ...] = ()
    if "reference" in doc:
        listed = _string_list(doc["reference"], "reference")
        if len(set(listed)) != len(listed):
            raise ParseError(
                "invalid-reference", "reference members must be distinct"
            )
        stray = sorted(set(listed) - universe)
        if stray:
            raise ParseError(
                "invalid-reference",
                f"reference names unknown candidate {stray[0]!r}",
            )
        if len(listed) != profile.k:
            raise ParseError(
                "invalid-reference",
                f"reference has {len(listed)} members, expected {profile.k}",
            )
        reference = tuple(listed)
    try:
        constraints = ConstraintSet.build(labels, intervals, dominances)
        return ElectionInstance(profile, constraints, rule, order, reference)
    except InputError as exc:
        # parser checks above should catch everything; keep a safety net
        raise ParseError("invalid-instance", str(exc)) from None


def _json_number(value: Score) -> int | float:
    if isinstance(value, Fraction):
        return int(value) if value.denominator == 1 else float(value)
    return value


def instance_to_document(instance: ElectionInstance) -> dict:
    labeling = instance.constraints.labeling
    constraints: list[dict] = []
    for interval in instance.constraints.intervals:
        constraints.append(
            {
                "type": "interval",
                "label": interval.label,
                "min": interval.lower,
                "max": interval.upper,
            }
        )
    for dominance in instance.constraints.dominances:
        constraints.append(
            {"type": "dominance", "over": dominance.over, "under": dominance.under}
        )
    if isinstance(instance.rule, WeaklySeparableRule):
        gamma = instance.rule.gamma
        rule: dict[str, Any] = {
            "type": "weakly_separable",
            "gamma": gamma if isinstance(gamma, str)
            else [_json_number(v) for v in gamma],
        }
    else:
        rule = {"type": "stv", "variant": instance.rule.variant}
    doc = {
        "candidates": list(instance.profile.candidates),
        "voters": [list(ranking) for ranking in instance.profile.voters],
        "k": instance.k,
        "labels": {
            name: sorted(labeling.members(name)) for name in labeling.names
        },
        "constraints": constraints,
        "rule": rule,
        "order": instance.order_kind,
    }
    if instance.reference:
        doc["reference"] = list(instance.reference)
    return doc


def serialize_instance(instance: ElectionInstance) -> str:
    return json.dumps(instance_to_document(instance), indent=2) + "\n"


def result_to_document(result: SolveResult) -> dict:
    optimal = result.is_optimal
    return {
        "status": result.status,
        "committee": sorted(result.committee) if optimal else None,
        "score": _json_number(result.score)
        if optimal and result.score is not None
        else None,
        "solver": result.solver,
    }


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _write_text(path: str | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
        return
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(text)


def _cmd_solve(args: argparse.Namespace) -> int:
    instance = parse_instance(_read_text(args.input))
    budget = None
    if args.budget is not None:
        if args.budget < 1:
            raise InputError("budget must be positive")
        # a user-specified budget caps enumeration only, not the pool size
        budget = OracleBudget(
            max_candidates=max(14, instance.profile.num_candidates),
            max_committee_enumeration=args.budget,
        )
    result = solve_instance(instance, solver=args.solver, budget=budget)
    document = result_to_document(result)
    _write_text(args.output, json.dumps(document, indent=2) + "\n")
    if result.reason:
        print(f"note: {result.reason}", file=sys.stderr)
    return 0 if result.is_optimal else 1


def _cmd_check(args: argparse.Namespace) -> int:
    instance = parse_instance(_read_text(args.input))
    names = [part.strip() for part in args.committee.split(",") if part.strip()]
    universe = set(instance.profile.candidates)
    stray = sorted(set(names) - universe)
    if stray:
        raise InputError(f"unknown candidate {stray[0]!r}")
    committee = tuple(sorted(set(names)))
    violations = check_committee(committee, instance.k, instance.constraints)
    if not violations:
        print("ok")
        return 0
    for violation in violations:
        print(violation.describe())
    return 1


def _cmd_gen(args: argparse.Namespace) -> int:
    if args.generator == "random":
        rule: WeaklySeparableRule | StvRule
        if args.rule.startswith("stv:"):
            rule = StvRule(args.rule.split(":", 1)[1])
        else:
            rule = WeaklySeparableRule(args.rule)
        instance = gen_random(
            args.candidates,
            args.voters,
            args.committee_size,
            args.labels,
            mode=args.mode,
            structure=args.structure,
            seed=args.seed,
            rule=rule,
            order_kind=args.order,
        )
    else:
        graph = parse_graph(_read_text(args.input))
        if args.generator == "vertex-cover":
            if args.variant == "intervals":
                instance = gen_vertex_cover_intervals(graph, args.cover_size)
            else:
                instance = gen_vertex_cover_dominance(graph, args.cover_size)
        elif args.generator == "clique-sntv":
            instance, _ = gen_clique_sntv(graph, args.clique_size)
        else:
            instance, _ = gen_clique_bloc(graph, args.clique_size)
    _write_text(args.output, serialize_instance(instance))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="comsel",
        description="Exact committee selection under interval and dominance "
        "constraints.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="solve an instance document")
    solve.add_argument("--input", required=True, help="instance JSON ('-' for stdin)")
    solve.add_argument("--solver", choices=SOLVERS, default="auto")
    solve.add_argument("--output", help="result JSON path (default stdout)")
    solve.add_argument(
        "--budget", type=int, help="max committees the oracle may enumerate"
    )

    chk = sub.add_parser("check", help="validate a committee against an instance")
    chk.add_argument("--input", required=True, help="instance JSON ('-' for stdin)")
    chk.add_argument(
        "--committee", required=True, help="comma-separated candidate names"
    )

    gen = sub.add_parser("gen", help="emit a generated instance document")
    gen_sub = gen.add_subparsers(dest="generator", required=True)

    cover = gen_sub.add_parser("vertex-cover")
    cover.add_argument("--input", required=True, help="edge-list graph file")
    cover.add_argument("--cover-size", type=int, required=True)
    cover.add_argument(
        "--variant", choices=("intervals", "dominance"), default="intervals"
    )
    cover.add_argument("--output")

    for name in ("clique-sntv", "clique-bloc"):
        clique = gen_sub.add_parser(name)
        clique.add_argument("--input", required=True, help="edge-list graph file")
        clique.add_argument("--clique-size", type=int, required=True)
        clique.add_argument("--output")

    rnd = gen_sub.add_parser("random")
    rnd.add_argument("--candidates", type=int, required=True)
    rnd.add_argument("--voters", type=int, required=True)
    rnd.add_argument("--committee-size", type=int, required=True)
    rnd.add_argument("--labels", type=int, default=0)
    rnd.add_argument("--mode", choices=MODES, default="disjoint")
    rnd.add_argument("--structure", choices=STRUCTURES, default="tree_like")
    rnd.add_argument("--seed", type=int, default=0)
    rnd.add_argument(
        "--rule",
        default="borda",
        help="scoring preset, or stv:simple / stv:droop_gregory",
    )
    rnd.add_argument("--order", choices=ORDER_KINDS)
    rnd.add_argument("--output")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "solve":
            return _cmd_solve(args)
        if args.command == "check":
            return _cmd_check(args)
        return _cmd_gen(args)
    except ParseError as exc:
        print(f"error[{exc.code}]: {exc}", file=sys.stderr)
        return 2
    except BudgetExceededError as exc:
        print(f"error[budget]: {exc}", file=sys.stderr)
        return 2
    except ContractViolation as exc:
        print(f"error[contract]: {exc}", file=sys.stderr)
        return 2
    except InputError as exc:
        print(f"error[invalid-input]: {exc}", file=sys.stderr)
        return 2
    except ComselError as exc:
        print(f"error[internal]: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error[io]: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
