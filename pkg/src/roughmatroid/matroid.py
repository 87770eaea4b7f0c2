"""Matroids over a finite universe, given by independent sets or by circuits."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from ._bits import bits_of, canonical_key, popcount, submasks, subsets_of_size
from .errors import (
    InvalidCircuitFamily,
    InvalidIndependenceFamily,
    UniverseMismatch,
    UniverseTooLarge,
)
from .relation import Universe

EXPLICIT_CAP = 20


def _require_cap(universe: Universe) -> None:
    if universe.n > EXPLICIT_CAP:
        raise UniverseTooLarge(universe.n, EXPLICIT_CAP)


@dataclass(frozen=True)
class SetFamily:
    """A duplicate-free family of subsets, each held as a bitmask."""

    universe: Universe
    members: frozenset

    def __post_init__(self):
        members = frozenset(self.members)
        full = self.universe.full
        if any(m < 0 or m & ~full for m in members):
            raise ValueError("family member outside the universe")
        object.__setattr__(self, "members", members)

    @classmethod
    def from_labels(cls, universe: Universe, sets: Iterable[Iterable[str]]) -> "SetFamily":
        return cls(universe, frozenset(universe.mask(s) for s in sets))

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.canonical())

    def __contains__(self, mask: int) -> bool:
        return mask in self.members

    def canonical(self) -> list:
        """Member masks sorted by cardinality, then lexicographically."""
        return sorted(self.members, key=canonical_key)

    def as_labels(self) -> list:
        """Members as label tuples in canonical order."""
        return [self.universe.labels(m) for m in self.canonical()]

    def as_sets(self) -> set:
        return {self.universe.frozen(m) for m in self.members}

    def union_of_members(self) -> int:
        out = 0
        for m in self.members:
            out |= m
        return out


@dataclass(frozen=True)
class AxiomReport:
    """Outcome of an axiom check.

    ``witness`` holds label tuples for the offending sets, followed by the
    offending element for C3, e.g. ``(("a", "b"), ("a", "c"), "a")``.
    """

    valid: bool
    failed_axiom: Optional[str] = None
    witness: Optional[tuple] = None

    def describe_witness(self) -> str:
        if self.witness is None:
            return "none"
        parts = []
        for w in self.witness:
            parts.append(w if isinstance(w, str) else "{" + ", ".join(w) + "}")
        return "(" + ", ".join(parts) + ")"


_VALID = AxiomReport(True)


def _fail(universe: Universe, axiom: str, *parts) -> AxiomReport:
    witness = tuple(p if isinstance(p, str) else universe.labels(p) for p in parts)
    return AxiomReport(False, axiom, witness)


def _augments(members: frozenset, a: int, b: int) -> bool:
    return any(a | 1 << e in members for e in bits_of(b & ~a))


def check_independence_axioms(fam: SetFamily) -> AxiomReport:
    """Exhaustive check of I1 (empty set), I2 (hereditary) and I3 (augmentation)."""
    u = fam.universe
    _require_cap(u)
    members = fam.members
    if 0 not in members:
        return _fail(u, "I1", 0)
    ordered = fam.canonical()
    # the first member with any missing subset also has a missing one-element-smaller subset
    for m in ordered:
        if any(m & ~(1 << e) not in members for e in bits_of(m)):
            missing = next(s for s in sorted(submasks(m), key=canonical_key) if s not in members)
            return _fail(u, "I2", m, missing)
    # with I2 in place, augmentation between consecutive sizes implies it for all sizes
    by_size: dict = {}
    for m in ordered:
        by_size.setdefault(popcount(m), []).append(m)
    if all(
        _augments(members, a, b)
        for k, smaller in by_size.items()
        for a in smaller
        for b in by_size.get(k + 1, ())
    ):
        return _VALID
    for a in ordered:
        for b in ordered:
            if popcount(a) < popcount(b) and not _augments(members, a, b):
                return _fail(u, "I3", a, b)
    raise AssertionError("unreachable: consecutive-size I3 failure has a witness")


def check_circuit_axioms(fam: SetFamily) -> AxiomReport:
    """Exhaustive check of C1 (no empty circuit), C2 (antichain), C3 (elimination)."""
    u = fam.universe
    _require_cap(u)
    members = fam.members
    if 0 in members:
        return _fail(u, "C1", 0)
    ordered = fam.canonical()
    for i, c1 in enumerate(ordered):
        for c2 in ordered[i + 1:]:
            if c1 & ~c2 == 0:
                return _fail(u, "C2", c1, c2)
    for i, c1 in enumerate(ordered):
        for c2 in ordered[i + 1:]:
            for e in bits_of(c1 & c2):
                rest = (c1 | c2) & ~(1 << e)
                if not any(c & ~rest == 0 for c in ordered):
                    return _fail(u, "C3", c1, c2, u.elements[e])
    return _VALID


@dataclass(frozen=True)
class Matroid:
    """A matroid held either as its independent sets or as its circuits.

    Exactly one of ``independents`` and ``circuits`` is set. Build through
    :func:`matroid_from_independents` or :func:`matroid_from_circuits` so the
    axioms are checked.
    """

    universe: Universe
    independents: Optional[SetFamily] = None
    circuits: Optional[SetFamily] = None

    @property
    def kind(self) -> str:
        return "explicit" if self.independents is not None else "circuits"

    def is_independent_mask(self, mask: int) -> bool:
        if self.independents is not None:
            return mask in self.independents.members
        return not any(c & ~mask == 0 for c in self.circuits.members)

    def is_independent(self, labels: Iterable[str]) -> bool:
        return self.is_independent_mask(self.universe.mask(labels))

    def independent_sets(self) -> SetFamily:
        """Explicit independence family (materialized for circuit-backed matroids)."""
        if self.independents is not None:
            return self.independents
        _require_cap(self.universe)
        n = self.universe.n
        by_low_bit = [[c for c in self.circuits.members if c >> i & 1] for i in range(n)]
        # ok[m]: m is independent; m's lowest element must not close a circuit with the rest
        ok = bytearray(1 << n)
        ok[0] = 1
        for m in range(1, 1 << n):
            low = (m & -m).bit_length() - 1
            if ok[m & (m - 1)] and not any(c & ~m == 0 for c in by_low_bit[low]):
                ok[m] = 1
        return SetFamily(self.universe, frozenset(m for m in range(1 << n) if ok[m]))


def matroid_from_independents(fam: SetFamily) -> Matroid:
    report = check_independence_axioms(fam)
    if not report.valid:
        raise InvalidIndependenceFamily(report)
    return Matroid(fam.universe, independents=fam)


def _as_family(universe: Universe, sets) -> SetFamily:
    if isinstance(sets, SetFamily):
        if sets.universe != universe:
            raise UniverseMismatch("family lives on a different universe")
        return sets
    return SetFamily.from_labels(universe, sets)


def matroid_from_circuits(universe: Universe, circuits) -> Matroid:
    """Matroid whose independent sets are those containing no given circuit.

    ``circuits`` is a SetFamily or an iterable of label collections; it must
    satisfy C1 to C3 or InvalidCircuitFamily is raised.
    """
    fam = _as_family(universe, circuits)
    report = check_circuit_axioms(fam)
    if not report.valid:
        raise InvalidCircuitFamily(report)
    return Matroid(universe, circuits=fam)


def free_matroid(universe: Universe) -> Matroid:
    return Matroid(universe, circuits=SetFamily(universe, frozenset()))


def circuits_of(m: Matroid) -> SetFamily:
    """Minimal dependent sets.

    Circuit-backed matroids return their stored family. Explicit ones are
    scanned in increasing cardinality: a dependent set containing no circuit
    found so far is minimal. Worst case O(3^n).
    """
    if m.circuits is not None:
        return m.circuits
    u = m.universe
    _require_cap(u)
    indep = m.independents.members
    found: list = []
    for k in range(u.n + 1):
        level = []
        for s in subsets_of_size(u.n, k):
            if s in indep or any(c & ~s == 0 for c in found):
                continue
            if any(s & ~(1 << e) not in indep for e in bits_of(s)):
                raise AssertionError(f"non-minimal circuit candidate {u.labels(s)}")
            level.append(s)
        found.extend(level)
    return SetFamily(u, frozenset(found))


def is_normal(m: Matroid) -> bool:
    """True iff every element lies in some independent set, i.e. no loops."""
    return all(m.is_independent_mask(1 << i) for i in range(m.universe.n))


def _same_universe(m1: Matroid, m2: Matroid) -> Universe:
    if m1.universe != m2.universe:
        raise UniverseMismatch("matroids live on different universes")
    _require_cap(m1.universe)
    return m1.universe


def union(m1: Matroid, m2: Matroid) -> Matroid:
    """Union matroid: independent sets are all I1 | I2."""
    u = _same_universe(m1, m2)
    a = m1.independent_sets().members
    b = m2.independent_sets().members
    return Matroid(u, independents=SetFamily(u, frozenset(x | y for x in a for y in b)))


def family_intersection_probe(m1: Matroid, m2: Matroid) -> AxiomReport:
    """Check whether the common independent sets of two matroids form a matroid."""
    u = _same_universe(m1, m2)
    common = m1.independent_sets().members & m2.independent_sets().members
    return check_independence_axioms(SetFamily(u, common))
