"""Command-line front end.

Exit codes: 0 success, 1 the computation ran but a checked claim failed,
2 bad input (parse error, unknown label, size cap, wrong relation kind).
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Optional, Sequence

from .bridge import (
    SUITES,
    circuit_approx,
    induced_matroid,
    induced_relation,
    round_trip_check,
    verify_propositions,
)
from .errors import RoughMatroidError
from .formats import (
    check_family,
    family_to_list,
    load_matroid,
    load_raw_family,
    load_relation,
    relation_to_dict,
)
from .grids import all_pers, letters, random_per
from .matroid import EXPLICIT_CAP, check_independence_axioms, circuits_of, is_normal, union
from .relation import check_properties, classes
from .rough import ApproxReport, approx_report

VERIFY_MAX_N = 6


@dataclass
class RunResult:
    exit_code: int
    output: str
    error: str = ""


class _Usage(RoughMatroidError):
    pass


# --- rendering ------------------------------------------------------------


def _set_text(labels) -> str:
    labels = list(labels)
    return "{" + ", ".join(labels) + "}" if labels else "∅"


def _family_text(sets) -> str:
    sets = list(sets)
    return "{" + ", ".join(_set_text(s) for s in sets) + "}" if sets else "∅"


def _ordered(universe, labels) -> list:
    return list(universe.labels(universe.mask(labels)))


def _frac(value: Optional[Fraction]) -> Optional[str]:
    return None if value is None else str(value)


def _frac_text(value: Optional[Fraction]) -> str:
    if value is None:
        return "undefined"
    return f"{value} ({float(value):g})"


def _approx_dict(universe, rep: ApproxReport) -> dict:
    return {
        "query": _ordered(universe, rep.query),
        "lower": _ordered(universe, rep.lower),
        "upper": _ordered(universe, rep.upper),
        "alpha": _frac(rep.alpha),
        "rho": _frac(rep.rho),
        "precise": rep.precise,
    }


def _approx_text(universe, rep: ApproxReport, title: str) -> str:
    return "\n".join([
        f"[{title}] X = {_set_text(_ordered(universe, rep.query))}",
        f"  lower = {_set_text(_ordered(universe, rep.lower))}",
        f"  upper = {_set_text(_ordered(universe, rep.upper))}",
        f"  alpha = {_frac_text(rep.alpha)}",
        f"  rho   = {_frac_text(rep.rho)}",
        f"  {'precise' if rep.precise else 'rough'}",
    ])


def _emit(args, payload, text: str) -> str:
    if args.format == "json":
        return json.dumps(payload, ensure_ascii=False)
    return text


# --- commands -------------------------------------------------------------


def _need(args, name: str):
    value = getattr(args, name)
    if value is None:
        raise _Usage(f"{args.verb} requires --{name.replace('_', '-')}")
    return value


def cmd_rel_check(args) -> RunResult:
    rel = load_relation(_need(args, "relation"))
    rep = check_properties(rel)
    payload = {
        "symmetric": rep.symmetric,
        "transitive": rep.transitive,
        "reflexive": rep.reflexive,
        "witnesses": {
            "symmetric": None if rep.symmetry_witness is None else list(rep.symmetry_witness),
            "transitive": None if rep.transitivity_witness is None else list(rep.transitivity_witness),
            "reflexive": rep.reflexivity_witness,
        },
    }

    def line(name, ok, witness):
        return f"{name}: yes" if ok else f"{name}: no (witness {witness})"

    text = "\n".join([
        line("symmetric", rep.symmetric, rep.symmetry_witness),
        line("transitive", rep.transitive, rep.transitivity_witness),
        line("reflexive", rep.reflexive, rep.reflexivity_witness),
    ])
    return RunResult(0 if rep.is_per else 1, _emit(args, payload, text))


def cmd_classes(args) -> RunResult:
    rel = load_relation(_need(args, "relation"))
    u = rel.universe
    blocks, isolated = classes(rel)
    payload = {"blocks": [_ordered(u, b) for b in blocks], "isolated": _ordered(u, isolated)}
    text = (
        f"blocks: {_family_text(payload['blocks'])}\n"
        f"isolated: {_set_text(payload['isolated'])}"
    )
    return RunResult(0, _emit(args, payload, text))


def _parse_set(spec: str) -> list:
    return [s.strip() for s in spec.split(",") if s.strip()]


def cmd_approx(args) -> RunResult:
    rel = load_relation(_need(args, "relation"))
    query = _parse_set(_need(args, "set"))
    u = rel.universe
    reports = {}
    if args.method in ("def5", "both"):
        reports["def5"] = approx_report(rel, query)
    if args.method in ("circuit", "both"):
        reports["circuit"] = circuit_approx(induced_matroid(rel), query)
    if args.method != "both":
        rep = reports[args.method]
        return RunResult(0, _emit(args, _approx_dict(u, rep), _approx_text(u, rep, args.method)))
    agree = reports["def5"] == reports["circuit"]
    payload = {
        "def5": _approx_dict(u, reports["def5"]),
        "circuit": _approx_dict(u, reports["circuit"]),
        "agree": agree,
    }
    lines = [_approx_text(u, reports["def5"], "def5"), _approx_text(u, reports["circuit"], "circuit")]
    if agree:
        lines.append("methods agree")
    else:
        for key in ("lower", "upper", "alpha", "rho"):
            a, b = payload["def5"][key], payload["circuit"][key]
            if a != b:
                lines.append(f"DISAGREE {key}: def5={a} circuit={b}")
    return RunResult(0 if agree else 1, _emit(args, payload, "\n".join(lines)))


def cmd_induce(args) -> RunResult:
    rel = load_relation(_need(args, "relation"))
    ind = induced_matroid(rel)
    payload = {"circuits": family_to_list(ind.circuit_family)}
    lines = [f"C(R) = {_family_text(payload['circuits'])}"]
    if rel.universe.n <= EXPLICIT_CAP:
        payload["independents"] = family_to_list(ind.independent_sets())
        lines.append(f"I(R) = {_family_text(payload['independents'])}")
    payload["normal"] = is_normal(ind.matroid)
    lines.append(f"normal: {'yes' if payload['normal'] else 'no'}")
    return RunResult(0, _emit(args, payload, "\n".join(lines)))


def cmd_matroid_check(args) -> RunResult:
    kind, fam = load_raw_family(_need(args, "matroid"))
    rep = check_family(kind, fam)
    payload = {
        "kind": kind,
        "valid": rep.valid,
        "failed_axiom": rep.failed_axiom,
        "witness": None if rep.witness is None else [w if isinstance(w, str) else list(w) for w in rep.witness],
    }
    text = f"{kind}: valid" if rep.valid else f"{kind}: invalid, {rep.failed_axiom} fails; witness {rep.describe_witness()}"
    return RunResult(0 if rep.valid else 1, _emit(args, payload, text))


def cmd_circuits(args) -> RunResult:
    m = load_matroid(_need(args, "matroid"))
    circuits = family_to_list(circuits_of(m))
    return RunResult(0, _emit(args, {"circuits": circuits}, f"C(M) = {_family_text(circuits)}"))


def cmd_union(args) -> RunResult:
    m = union(load_matroid(_need(args, "matroid")), load_matroid(_need(args, "matroid2")))
    rep = check_independence_axioms(m.independents)
    payload = {
        "independents": family_to_list(m.independents),
        "circuits": family_to_list(circuits_of(m)) if rep.valid else None,
        "valid": rep.valid,
    }
    lines = [f"I1 + I2 = {_family_text(payload['independents'])}"]
    if rep.valid:
        lines.append(f"C(M1 + M2) = {_family_text(payload['circuits'])}")
    else:
        lines.append(f"union is not a matroid: {rep.failed_axiom} fails; witness {rep.describe_witness()}")
    return RunResult(0 if rep.valid else 1, _emit(args, payload, "\n".join(lines)))


def cmd_induce_rel(args) -> RunResult:
    rel = induced_relation(load_matroid(_need(args, "matroid")))
    payload = relation_to_dict(rel)
    text = "R(M) = {" + ", ".join(f"({x}, {y})" for x, y in payload["pairs"]) + "}"
    return RunResult(0, _emit(args, payload, text))


def _report_line(rep) -> str:
    if rep.holds:
        line = f"{rep.proposition}: holds ({rep.instances_checked} instances)"
    else:
        line = (
            f"{rep.proposition}: FAILS ({rep.instances_checked} instances checked); counterexample "
            + json.dumps(rep.counterexample, ensure_ascii=False)
        )
    if rep.details:
        line += " " + json.dumps(rep.details)
    return line


def cmd_roundtrip(args) -> RunResult:
    rep = round_trip_check(load_relation(_need(args, "relation")))
    return RunResult(0 if rep.holds else 1, _emit(args, rep.to_dict(), _report_line(rep)))


def cmd_verify(args) -> RunResult:
    n = args.n
    if n < 0 or n > VERIFY_MAX_N:
        raise _Usage(f"--n must be between 0 and {VERIFY_MAX_N}")
    warning = ""
    if n > 4:
        warning = f"warning: exhaustive grid at n={n} may take minutes"
    grid = list(all_pers(letters(n)))
    pairs = list(combinations_with_replacement(grid, 2))
    rng = random.Random(args.seed)
    sampled = [random_per(letters(args.sample_n), rng) for _ in range(args.samples)]
    reports = verify_propositions(grid + sampled, pairs=pairs, suite=args.suite)
    payload = [r.to_dict() for r in reports]
    text = "\n".join(_report_line(r) for r in reports)
    code = 0 if all(r.holds for r in reports) else 1
    return RunResult(code, _emit(args, payload, text), warning)


COMMANDS = {
    "rel-check": cmd_rel_check,
    "classes": cmd_classes,
    "approx": cmd_approx,
    "induce": cmd_induce,
    "matroid-check": cmd_matroid_check,
    "circuits": cmd_circuits,
    "union": cmd_union,
    "induce-rel": cmd_induce_rel,
    "roundtrip": cmd_roundtrip,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--relation", metavar="PATH")
    common.add_argument("--matroid", metavar="PATH")
    common.add_argument("--matroid2", metavar="PATH")
    common.add_argument("--set", metavar="a,b,c", help="query set; empty string for the empty set")
    common.add_argument("--method", choices=("def5", "circuit", "both"), default="both")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--suite", choices=SUITES + ("all",), default="all")
    common.add_argument("--n", type=int, default=4, help="exhaustive grid size for verify")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--samples", type=int, default=20, help="random relations added to verify")
    common.add_argument("--sample-n", type=int, default=10, help="universe size of random relations")

    parser = argparse.ArgumentParser(
        prog="roughmatroid",
        description="Rough sets over symmetric and transitive relations and their matroids.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)
    for verb in COMMANDS:
        sub.add_parser(verb, parents=[common])
    return parser


def run(argv: Optional[Sequence[str]] = None) -> RunResult:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return RunResult(2 if exc.code else 0, "", "")
    try:
        return COMMANDS[args.verb](args)
    except RoughMatroidError as exc:
        return RunResult(2, "", f"error: {exc}")


def main(argv: Optional[Sequence[str]] = None) -> int:
    result = run(argv)
    if result.output:
        print(result.output)
    if result.error:
        print(result.error, file=sys.stderr)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
