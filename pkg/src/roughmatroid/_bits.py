"""Bitmask helpers. A subset of an n-element universe is an int < 2**n."""

from itertools import combinations
from typing import Iterator


def bits_of(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def canonical_key(mask: int) -> tuple:
    """Sort key: cardinality first, then lexicographic on element indices."""
    return (popcount(mask), tuple(bits_of(mask)))


def subsets_of_size(n: int, k: int) -> Iterator[int]:
    """k-subsets of range(n) in lexicographic order."""
    for combo in combinations(range(n), k):
        mask = 0
        for i in combo:
            mask |= 1 << i
        yield mask


def subsets_canonical(n: int) -> Iterator[int]:
    """All subsets of range(n) in canonical (cardinality, lexicographic) order."""
    for k in range(n + 1):
        yield from subsets_of_size(n, k)


def submasks(mask: int) -> Iterator[int]:
    """All submasks of ``mask``, including 0 and ``mask`` itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask
