"""Definition-level reference computations on plain Python sets.

Independent of the bitmask code paths in the package.
"""

from fractions import Fraction
from itertools import chain, combinations


def powerset(items):
    items = list(items)
    return [frozenset(c) for c in chain.from_iterable(combinations(items, k) for k in range(len(items) + 1))]


def nbhd(pairs, x):
    return {y for (a, y) in pairs if a == x}


def lower(universe, pairs, X):
    return frozenset(x for x in universe if nbhd(pairs, x) <= set(X))


def upper(universe, pairs, X):
    return frozenset(x for x in universe if nbhd(pairs, x) & set(X))


def alpha(universe, pairs, X):
    up = upper(universe, pairs, X)
    return Fraction(len(lower(universe, pairs, X)), len(up)) if up else None


def is_independent_family(fam):
    fam = set(fam)
    if frozenset() not in fam:
        return False
    for i in fam:
        if any(frozenset(s) not in fam for s in powerset(i)):
            return False
    for a in fam:
        for b in fam:
            if len(a) < len(b) and not any(a | {e} in fam for e in b - a):
                return False
    return True


def minimal_dependent(universe, fam):
    dep = [s for s in powerset(universe) if s not in fam]
    return {d for d in dep if not any(o < d for o in dep)}


def all_downsets(universe):
    """Every subset-closed family over ``universe`` that contains the empty set."""
    subsets = sorted(powerset(universe), key=lambda s: (len(s), sorted(s)))[1:]
    out = []

    def rec(k, fam):
        if k == len(subsets):
            out.append(frozenset(fam))
            return
        s = subsets[k]
        rec(k + 1, fam)
        if all(s - {e} in fam for e in s):
            fam.add(s)
            rec(k + 1, fam)
            fam.remove(s)

    rec(0, {frozenset()})
    return out


def all_matroid_families(universe):
    return [f for f in all_downsets(universe) if is_independent_family(f)]
