from math import comb

import pytest

from roughmatroid import check_properties
from roughmatroid.grids import all_pers, all_relations, letters


def bell(n):
    b = [1]
    for k in range(n):
        b.append(sum(comb(k, i) * b[i] for i in range(k + 1)))
    return b[n]


def partial_partition_count(n):
    # choose the non-isolated subset, then partition it
    return sum(comb(n, k) * bell(k) for k in range(n + 1))


@pytest.mark.parametrize("n", [0, 1, 2, 3, 4])
def test_pers_match_filtered_brute_force(n):
    u = letters(n)
    brute = {r for r in all_relations(u) if check_properties(r).is_per}
    generated = list(all_pers(u))
    assert len(generated) == len(set(generated))
    assert set(generated) == brute


@pytest.mark.parametrize("n, expected", [(0, 1), (1, 2), (2, 5), (3, 15), (4, 52), (5, 203), (6, 877)])
def test_per_counts(n, expected):
    assert partial_partition_count(n) == bell(n + 1) == expected
    assert sum(1 for _ in all_pers(letters(n))) == expected


def test_relation_counts():
    assert sum(1 for _ in all_relations(letters(3))) == 512
