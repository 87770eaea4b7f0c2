"""Enumeration and sampling of relations for exhaustive and random checks."""

from __future__ import annotations

import random
import string
from typing import Iterator

from .relation import Relation, Universe


def letters(n: int) -> Universe:
    """Universe a, b, c, ... of size n (two-letter labels past 26)."""
    if n <= 26:
        return Universe(tuple(string.ascii_lowercase[:n]))
    return Universe(tuple(f"e{i}" for i in range(n)))


def _rows_from_blocks(n: int, assignment: list) -> tuple:
    """assignment[i] is a block id or -1 for an isolated element."""
    masks: dict = {}
    for i, b in enumerate(assignment):
        if b >= 0:
            masks[b] = masks.get(b, 0) | 1 << i
    return tuple(masks[b] if b >= 0 else 0 for b in assignment)


def all_pers(universe: Universe) -> Iterator[Relation]:
    """Every symmetric and transitive relation on ``universe``.

    Each one is a partition of some subset S, with elements outside S
    isolated. Generated as restricted growth strings where -1 marks an
    isolated element, so there are Bell(n + 1) of them.
    """
    n = universe.n
    assignment = [0] * n

    def rec(i: int, blocks: int):
        if i == n:
            yield Relation(universe, _rows_from_blocks(n, assignment))
            return
        for b in range(-1, blocks + 1):
            assignment[i] = b
            yield from rec(i + 1, blocks + 1 if b == blocks else blocks)

    yield from rec(0, 0)


def random_per(universe: Universe, rng: random.Random) -> Relation:
    n = universe.n
    assignment = [rng.randrange(-1, n) for _ in range(n)]
    return Relation(universe, _rows_from_blocks(n, assignment))


def random_relation(universe: Universe, rng: random.Random, density: float = 0.5) -> Relation:
    n = universe.n
    rows = []
    for _ in range(n):
        row = 0
        for j in range(n):
            if rng.random() < density:
                row |= 1 << j
        rows.append(row)
    return Relation(universe, tuple(rows))


def all_relations(universe: Universe) -> Iterator[Relation]:
    """All 2**(n*n) relations; only sensible for n <= 4."""
    n = universe.n
    for code in range(1 << (n * n)):
        yield Relation(universe, tuple(code >> (i * n) & ((1 << n) - 1) for i in range(n)))
