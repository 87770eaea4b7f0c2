"""Matroids induced by symmetric and transitive relations, and back.

A symmetric and transitive relation R yields the circuit family of all
related pairs ``{x, y}`` with ``x != y``; every such family satisfies the
circuit axioms. Conversely a matroid yields the relation pairing the two
elements of each 2-element circuit, plus the full diagonal.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from typing import Iterable, Optional, Sequence

from ._bits import bits_of, popcount
from .errors import InvalidCircuitFamily
from .formats import family_to_list, matroid_to_dict, relation_to_dict
from .matroid import (
    Matroid,
    SetFamily,
    check_circuit_axioms,
    circuits_of,
    is_normal,
    matroid_from_circuits,
    union,
)
from .relation import Relation, check_properties, intersect, require_per
from .rough import ApproxReport, approx_report


def circuits_from_relation(rel: Relation) -> SetFamily:
    """All unordered related pairs {x, y} with x != y. Needs a PER."""
    require_per(rel)
    members = set()
    for i, row in enumerate(rel.rows):
        for j in bits_of(row & ~((2 << i) - 1)):
            members.add(1 << i | 1 << j)
    return SetFamily(rel.universe, frozenset(members))


@dataclass(frozen=True)
class InducedMatroid:
    source: Relation
    matroid: Matroid
    circuit_family: SetFamily
    # per circuit: the union of every circuit meeting it
    _reach: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        circuits = list(self.circuit_family.members)
        reach = []
        for c in circuits:
            r = 0
            for d in circuits:
                if d & c:
                    r |= d
            reach.append((c, r))
        object.__setattr__(self, "_reach", tuple(reach))

    def independent_sets(self) -> SetFamily:
        return self.matroid.independent_sets()


def induced_matroid(rel: Relation) -> InducedMatroid:
    fam = circuits_from_relation(rel)
    return InducedMatroid(rel, matroid_from_circuits(rel.universe, fam), fam)


def circuit_approx_bits(ind: InducedMatroid, x: int) -> tuple:
    """(lower, upper) masks computed from the circuit family.

    upper = (union of circuits meeting X) | {x in X | x R x}
    lower = {x in X | r(x) == {x}}
            | (union of circuits C such that every circuit meeting C lies in X)
            | {x | r(x) empty}
    """
    rows = ind.source.rows
    y1 = 0
    y3 = 0
    for c, reach in ind._reach:
        if c & x:
            y1 |= c
        if reach & ~x == 0:
            y3 |= c
    y2 = y2_strict = y4 = 0
    for i, row in enumerate(rows):
        bit = 1 << i
        if not row:
            y4 |= bit
        elif x & bit:
            if row & bit:
                y2 |= bit
            if row == bit:
                y2_strict |= bit
    return y2_strict | y3 | y4, y1 | y2


def circuit_approx(ind: InducedMatroid, X: Iterable[str]) -> ApproxReport:
    u = ind.source.universe
    x = u.mask(X)
    low, up = circuit_approx_bits(ind, x)
    return ApproxReport.from_sets(u.frozen(x), u.frozen(low), u.frozen(up))


def induced_relation(m: Matroid) -> Relation:
    """x ~ y iff {x, y} is a circuit or x == y. Circuits of other sizes add nothing."""
    circuits = circuits_of(m)
    report = check_circuit_axioms(circuits)
    if not report.valid:
        raise InvalidCircuitFamily(report)
    rows = [1 << i for i in range(m.universe.n)]
    for c in circuits.members:
        if popcount(c) == 2:
            i, j = bits_of(c)
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    return Relation(m.universe, tuple(rows))


def with_diagonal(rel: Relation) -> Relation:
    return Relation(rel.universe, tuple(row | 1 << i for i, row in enumerate(rel.rows)))


@dataclass(frozen=True)
class PropositionReport:
    """Outcome of checking one claim over a grid of instances.

    ``counterexample`` is the first failing instance, serialized in the
    relation/matroid file formats together with claimed and observed values.
    """

    proposition: str
    holds: bool
    instances_checked: int
    counterexample: Optional[dict] = None
    details: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        out = {
            "proposition": self.proposition,
            "holds": self.holds,
            "instances_checked": self.instances_checked,
            "counterexample": self.counterexample,
        }
        if self.details:
            out["details"] = self.details
        return out


def round_trip_check(rel: Relation) -> PropositionReport:
    """Relation -> induced matroid -> induced relation gives R plus the diagonal."""
    back = induced_relation(induced_matroid(rel).matroid)
    expected = with_diagonal(rel)
    if back == expected:
        return PropositionReport("roundtrip", True, 1)
    return PropositionReport(
        "roundtrip",
        False,
        1,
        {
            "relation": relation_to_dict(rel),
            "claimed": relation_to_dict(expected)["pairs"],
            "observed": relation_to_dict(back)["pairs"],
        },
    )


@dataclass(frozen=True)
class UnionRelationCheck:
    """Union of two induced matroids and the relation it induces."""

    union: Matroid
    union_circuits: SetFamily
    relation: Relation

    @property
    def off_diagonal_pairs(self) -> int:
        return sum(bin(row & ~(1 << i)).count("1") for i, row in enumerate(self.relation.rows))

    @property
    def circuits_empty(self) -> bool:
        return not self.union_circuits.members


def union_relation_check(r1: Relation, r2: Relation) -> UnionRelationCheck:
    m = union(induced_matroid(r1).matroid, induced_matroid(r2).matroid)
    circuits = circuits_of(m)
    return UnionRelationCheck(m, circuits, induced_relation(m))


# --- proposition checks over grids ---------------------------------------


def _report(pid: str, instances, check) -> PropositionReport:
    """Run ``check`` on each instance; it returns None or a counterexample dict."""
    count = 0
    for inst in instances:
        count += 1
        bad = check(inst)
        if bad is not None:
            return PropositionReport(pid, False, count, bad)
    return PropositionReport(pid, True, count)


def check_p1(rel: Relation) -> Optional[dict]:
    report = check_circuit_axioms(circuits_from_relation(rel))
    if report.valid:
        return None
    return {
        "relation": relation_to_dict(rel),
        "claimed": "circuit family satisfies C1-C3",
        "observed": {"failed_axiom": report.failed_axiom, "witness": report.describe_witness()},
    }


def check_p2(rel: Relation) -> Optional[dict]:
    ind = induced_matroid(rel)
    if is_normal(ind.matroid):
        return None
    loops = [x for i, x in enumerate(rel.universe) if not ind.matroid.is_independent_mask(1 << i)]
    return {"relation": relation_to_dict(rel), "claimed": "normal", "observed": {"loops": loops}}


def check_p3(rel: Relation) -> Optional[dict]:
    fam = circuits_from_relation(rel)
    circuits = fam.canonical()
    u = rel.universe
    for c1 in circuits:
        for c2 in circuits:
            if c1 == c2 or not c1 & c2:
                continue
            for e1 in bits_of(c1 & ~c2):
                for e2 in bits_of(c2 & ~c1):
                    need = 1 << e1 | 1 << e2
                    span = c1 | c2
                    if not any(c & need == need and c & ~span == 0 for c in circuits):
                        return {
                            "relation": relation_to_dict(rel),
                            "claimed": "a circuit holds e1, e2 inside C1 | C2",
                            "observed": {
                                "C1": list(u.labels(c1)),
                                "C2": list(u.labels(c2)),
                                "e1": u.elements[e1],
                                "e2": u.elements[e2],
                            },
                        }
    return None


def check_p4(pair: tuple) -> Optional[dict]:
    r1, r2 = pair
    both = induced_matroid(intersect(r1, r2)).independent_sets().members
    for name, r in (("I(R1)", r1), ("I(R2)", r2)):
        extra = induced_matroid(r).independent_sets().members - both
        if extra:
            u = r1.universe
            return {
                "relation1": relation_to_dict(r1),
                "relation2": relation_to_dict(r2),
                "claimed": f"{name} is contained in I(R1 & R2)",
                "observed": {"not_contained": family_to_list(SetFamily(u, extra))},
            }
    return None


def _approx_mismatch(rel: Relation, ind: InducedMatroid, x: int) -> Optional[dict]:
    u = rel.universe
    q = u.labels(x)
    want = approx_report(rel, q)
    got = circuit_approx(ind, q)
    if want == got:
        return None
    return {
        "relation": relation_to_dict(rel),
        "query": list(q),
        "claimed": {"lower": list(u.labels(u.mask(want.lower))), "upper": list(u.labels(u.mask(want.upper)))},
        "observed": {"lower": list(u.labels(u.mask(got.lower))), "upper": list(u.labels(u.mask(got.upper)))},
    }


def check_p5(rel: Relation, queries: Optional[Sequence[int]] = None) -> Optional[dict]:
    """Circuit-based approximations against the neighborhood definition.

    ``queries`` are subset masks; all 2**n subsets by default.
    """
    ind = induced_matroid(rel)
    for x in range(1 << rel.universe.n) if queries is None else queries:
        bad = _approx_mismatch(rel, ind, x)
        if bad is not None:
            return bad
    return None


def check_p6(m: Matroid) -> Optional[dict]:
    rel = induced_relation(m)
    props = check_properties(rel)
    if props.is_per:
        return None
    return {
        "matroid": matroid_to_dict(m),
        "claimed": "induced relation is symmetric and transitive",
        "observed": {
            "symmetry_witness": props.symmetry_witness,
            "transitivity_witness": props.transitivity_witness,
        },
    }


def check_p7(pair: tuple) -> Optional[dict]:
    r1, r2 = pair
    res = union_relation_check(r1, r2)
    if res.circuits_empty:
        return None
    return {
        "relation1": relation_to_dict(r1),
        "relation2": relation_to_dict(r2),
        "claimed": {"union_circuits": []},
        "observed": {
            "union_circuits": family_to_list(res.union_circuits),
            "off_diagonal_pairs": res.off_diagonal_pairs,
        },
    }


def check_roundtrip(rel: Relation) -> Optional[dict]:
    return round_trip_check(rel).counterexample


def verify_p7(pairs: Iterable[tuple]) -> PropositionReport:
    """Check that the union of two induced matroids has no circuits.

    The report also records whether the relation induced by every union is
    diagonal-only, which is a weaker reading of the same claim.
    """
    count = 0
    first = None
    diagonal_only = True
    nonempty = 0
    for pair in pairs:
        count += 1
        res = union_relation_check(*pair)
        diagonal_only &= res.off_diagonal_pairs == 0
        if not res.circuits_empty:
            nonempty += 1
            if first is None:
                first = check_p7(pair)
    details = {"diagonal_only_everywhere": diagonal_only, "instances_with_union_circuits": nonempty}
    return PropositionReport("p7", first is None, count, first, details)


SUITES = ("p1", "p2", "p3", "p4", "p5", "p6", "p7", "roundtrip")


def verify_propositions(
    relations: Sequence[Relation],
    pairs: Optional[Sequence[tuple]] = None,
    suite: str = "all",
    matroids: Optional[Sequence[Matroid]] = None,
    random_queries: Optional[tuple] = None,
) -> list:
    """Check the selected claims; one PropositionReport per suite.

    ``relations`` must be symmetric and transitive. ``pairs`` defaults to all
    unordered pairs of ``relations`` (with repetition). ``matroids`` for p6
    default to the induced matroids and their pairwise unions.
    ``random_queries=(rng, k)`` samples k query sets per relation for p5
    instead of enumerating all of them.
    """
    relations = list(relations)
    for rel in relations:
        require_per(rel)
    names = SUITES if suite == "all" else (suite,)
    unknown = [s for s in names if s not in SUITES]
    if unknown:
        raise ValueError(f"unknown suite {unknown[0]!r}")
    if pairs is None:
        pairs = list(combinations_with_replacement(relations, 2))
    reports = []
    for name in names:
        if name == "p1":
            reports.append(_report("p1", relations, check_p1))
        elif name == "p2":
            reports.append(_report("p2", relations, check_p2))
        elif name == "p3":
            reports.append(_report("p3", relations, check_p3))
        elif name == "p4":
            reports.append(_report("p4", pairs, check_p4))
        elif name == "p5":
            if random_queries is None:
                reports.append(_report("p5", relations, check_p5))
            else:
                rng, k = random_queries
                reports.append(_report(
                    "p5",
                    relations,
                    lambda r: check_p5(r, sample_queries(rng, r.universe.n, k)),
                ))
        elif name == "p6":
            ms = matroids
            if ms is None:
                ms = [induced_matroid(r).matroid for r in relations]
                ms += [union(induced_matroid(a).matroid, induced_matroid(b).matroid) for a, b in pairs]
            reports.append(_report("p6", ms, check_p6))
        elif name == "p7":
            reports.append(verify_p7(pairs))
        elif name == "roundtrip":
            reports.append(_report("roundtrip", relations, check_roundtrip))
    return reports


def sample_queries(rng: random.Random, n: int, k: int) -> list:
    return [rng.getrandbits(n) for _ in range(k)]
