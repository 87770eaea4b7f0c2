"""Finite universes and binary relations on them.

A relation is stored as one adjacency bit-row per element: bit ``j`` of
``rows[i]`` is set iff ``(elements[i], elements[j])`` is in the relation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from ._bits import bits_of
from .errors import NotSymmetricTransitive, UniverseMismatch, UniverseTooLarge, UnknownLabel

MAX_UNIVERSE = 64


@dataclass(frozen=True)
class Universe:
    """An ordered finite set of distinct string labels.

    The element order fixed here is the canonical order for all output.
    """

    elements: tuple
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        elements = tuple(self.elements)
        if len(elements) > MAX_UNIVERSE:
            raise UniverseTooLarge(len(elements), MAX_UNIVERSE)
        for label in elements:
            if not isinstance(label, str) or not label:
                raise ValueError(f"labels must be non-empty strings, got {label!r}")
        if len(set(elements)) != len(elements):
            raise ValueError("universe labels must be pairwise distinct")
        object.__setattr__(self, "elements", elements)
        object.__setattr__(self, "_index", {x: i for i, x in enumerate(elements)})

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, label) -> bool:
        return label in self._index

    @property
    def n(self) -> int:
        return len(self.elements)

    @property
    def full(self) -> int:
        return (1 << len(self.elements)) - 1

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except (KeyError, TypeError):
            raise UnknownLabel(label) from None

    def mask(self, labels: Iterable[str]) -> int:
        """Bitmask of a collection of labels."""
        m = 0
        for label in labels:
            m |= 1 << self.index(label)
        return m

    def labels(self, mask: int) -> tuple:
        """Labels of ``mask`` in canonical element order."""
        return tuple(self.elements[i] for i in bits_of(mask))

    def frozen(self, mask: int) -> frozenset:
        return frozenset(self.elements[i] for i in bits_of(mask))


@dataclass(frozen=True)
class Relation:
    universe: Universe
    rows: tuple

    @classmethod
    def from_rows(cls, universe: Universe, rows: Iterable[int]) -> "Relation":
        rows = tuple(rows)
        if len(rows) != universe.n or any(r < 0 or r > universe.full for r in rows):
            raise ValueError("rows do not fit the universe")
        return cls(universe, rows)

    @classmethod
    def empty(cls, universe: Universe) -> "Relation":
        return cls(universe, (0,) * universe.n)

    @classmethod
    def diagonal(cls, universe: Universe) -> "Relation":
        return cls(universe, tuple(1 << i for i in range(universe.n)))

    @property
    def pairs(self) -> frozenset:
        els = self.universe.elements
        return frozenset((els[i], els[j]) for i, row in enumerate(self.rows) for j in bits_of(row))

    def sorted_pairs(self) -> list:
        """Pairs in canonical (row-major) order."""
        els = self.universe.elements
        return [(els[i], els[j]) for i, row in enumerate(self.rows) for j in bits_of(row)]

    def __len__(self) -> int:
        return sum(bin(r).count("1") for r in self.rows)

    def __contains__(self, pair) -> bool:
        x, y = pair
        return bool(self.rows[self.universe.index(x)] >> self.universe.index(y) & 1)


@dataclass(frozen=True)
class PropertyReport:
    symmetric: bool
    transitive: bool
    reflexive: bool
    symmetry_witness: Optional[tuple] = None
    transitivity_witness: Optional[tuple] = None
    reflexivity_witness: Optional[str] = None

    @property
    def is_per(self) -> bool:
        return self.symmetric and self.transitive


def make_relation(universe: Universe, pairs: Iterable) -> Relation:
    """Build a relation from label pairs; duplicates are dropped."""
    rows = [0] * universe.n
    for x, y in pairs:
        rows[universe.index(x)] |= 1 << universe.index(y)
    return Relation(universe, tuple(rows))


def successor(rel: Relation, x: str) -> frozenset:
    """Successor neighborhood {y | x R y}."""
    return rel.universe.frozen(rel.rows[rel.universe.index(x)])


def _symmetry_violation(rows) -> Optional[tuple]:
    for i, row in enumerate(rows):
        for j in bits_of(row):
            if not rows[j] >> i & 1:
                return (i, j)
    return None


def _transitivity_violation(rows) -> Optional[tuple]:
    # x R y and y R z imply r(y) is inside r(x); the first missing z is the witness
    for i, row in enumerate(rows):
        for j in bits_of(row):
            missing = rows[j] & ~row
            if missing:
                return (i, j, (missing & -missing).bit_length() - 1)
    return None


def check_properties(rel: Relation) -> PropertyReport:
    """Symmetry, transitivity and reflexivity, each with a first-found witness."""
    els = rel.universe.elements
    sym = _symmetry_violation(rel.rows)
    trans = _transitivity_violation(rel.rows)
    refl = next((i for i, row in enumerate(rel.rows) if not row >> i & 1), None)
    return PropertyReport(
        symmetric=sym is None,
        transitive=trans is None,
        reflexive=refl is None,
        symmetry_witness=None if sym is None else tuple(els[i] for i in sym),
        transitivity_witness=None if trans is None else tuple(els[i] for i in trans),
        reflexivity_witness=None if refl is None else els[refl],
    )


def is_per(rel: Relation) -> bool:
    return _symmetry_violation(rel.rows) is None and _transitivity_violation(rel.rows) is None


def require_per(rel: Relation) -> None:
    """Raise NotSymmetricTransitive unless ``rel`` is symmetric and transitive."""
    els = rel.universe.elements
    bad = _symmetry_violation(rel.rows) or _transitivity_violation(rel.rows)
    if bad is not None:
        raise NotSymmetricTransitive(tuple(els[i] for i in bad))


def intersect(r1: Relation, r2: Relation) -> Relation:
    if r1.universe != r2.universe:
        raise UniverseMismatch("relations live on different universes")
    return Relation(r1.universe, tuple(a & b for a, b in zip(r1.rows, r2.rows)))


def class_masks(rel: Relation) -> tuple:
    """(block masks sorted by element order, isolated mask) of a PER."""
    require_per(rel)
    blocks = sorted({row for row in rel.rows if row}, key=lambda m: tuple(bits_of(m)))
    isolated = 0
    for i, row in enumerate(rel.rows):
        if not row:
            isolated |= 1 << i
    return blocks, isolated


def classes(rel: Relation) -> tuple:
    """Decompose a symmetric and transitive relation.

    Returns ``(blocks, isolated)``: the equivalence classes on the domain
    ``{x | r(x) nonempty}`` as frozensets, ordered by their smallest
    element, and the frozenset of elements with empty neighborhood.
    """
    blocks, isolated = class_masks(rel)
    u = rel.universe
    return [u.frozen(b) for b in blocks], u.frozen(isolated)
