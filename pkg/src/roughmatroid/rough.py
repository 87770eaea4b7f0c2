"""Lower/upper approximations evaluated straight from successor neighborhoods.

These are the reference operators: every other route to an approximation
is checked against them.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from ._bits import subsets_canonical
from .errors import UniverseTooLarge
from .relation import Relation

PROBE_CAP = 20


def lower_bits(rel: Relation, x: int) -> int:
    out = 0
    for i, row in enumerate(rel.rows):
        if row & ~x == 0:
            out |= 1 << i
    return out


def upper_bits(rel: Relation, x: int) -> int:
    out = 0
    for i, row in enumerate(rel.rows):
        if row & x:
            out |= 1 << i
    return out


def lower(rel: Relation, X: Iterable[str]) -> frozenset:
    """{x | r(x) is a subset of X}. Elements with empty neighborhood always qualify."""
    u = rel.universe
    return u.frozen(lower_bits(rel, u.mask(X)))


def upper(rel: Relation, X: Iterable[str]) -> frozenset:
    """{x | r(x) meets X}."""
    u = rel.universe
    return u.frozen(upper_bits(rel, u.mask(X)))


@dataclass(frozen=True)
class ApproxReport:
    """Approximations of one query set.

    ``alpha`` and ``rho`` are exact fractions, or ``None`` when the upper
    approximation is empty (the ratio is undefined there). ``alpha`` can
    exceed 1 when elements with empty neighborhood sit in the lower
    approximation but not the upper one.
    """

    query: frozenset
    lower: frozenset
    upper: frozenset
    alpha: Optional[Fraction]
    rho: Optional[Fraction]
    precise: bool

    @classmethod
    def from_sets(cls, query: frozenset, low: frozenset, up: frozenset) -> "ApproxReport":
        alpha = Fraction(len(low), len(up)) if up else None
        rho = None if alpha is None else 1 - alpha
        return cls(query, low, up, alpha, rho, low == up)


def approx_report(rel: Relation, X: Iterable[str]) -> ApproxReport:
    u = rel.universe
    x = u.mask(X)
    return ApproxReport.from_sets(u.frozen(x), u.frozen(lower_bits(rel, x)), u.frozen(upper_bits(rel, x)))


class Property(enum.Enum):
    SYMMETRIC = "symmetric"
    TRANSITIVE = "transitive"


@dataclass(frozen=True)
class ProbeReport:
    property: Property
    holds: bool
    witness: Optional[frozenset] = None


def _symmetric_ok(rel: Relation, x: int) -> bool:
    return x & ~lower_bits(rel, upper_bits(rel, x)) == 0


def _transitive_ok(rel: Relation, x: int) -> bool:
    low = lower_bits(rel, x)
    return low & ~lower_bits(rel, low) == 0


def probe_property(rel: Relation, prop: Property | str) -> ProbeReport:
    """Decide a relation property through the approximation operators alone.

    Symmetry: X is inside lower(upper(X)) for every X.
    Transitivity: lower(X) is inside lower(lower(X)) for every X.
    Every subset is visited in canonical order; the first violating X is
    returned as the witness.
    """
    prop = Property(prop)
    n = rel.universe.n
    if n > PROBE_CAP:
        raise UniverseTooLarge(n, PROBE_CAP)
    ok = _symmetric_ok if prop is Property.SYMMETRIC else _transitive_ok
    for x in subsets_canonical(n):
        if not ok(rel, x):
            return ProbeReport(prop, False, rel.universe.frozen(x))
    return ProbeReport(prop, True)

