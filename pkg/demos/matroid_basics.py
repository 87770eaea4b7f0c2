"""
Independent sets, circuits and unions
=====================================

Two small matroids on three points, their circuits, their union, and why
the common independent sets of two matroids need not form a matroid.
"""

from roughmatroid import (
    SetFamily,
    Universe,
    check_independence_axioms,
    circuits_of,
    family_intersection_probe,
    is_normal,
    matroid_from_independents,
    union,
)

u = Universe(("a", "b", "c"))
I1 = SetFamily.from_labels(u, [[], "a", "b", "c", "ac", "bc"])
I2 = SetFamily.from_labels(u, [[], "a", "b", "c", "ab", "bc"])
M1 = matroid_from_independents(I1)
M2 = matroid_from_independents(I2)

# %%
print("C(M1) =", circuits_of(M1).as_labels())
print("C(M2) =", circuits_of(M2).as_labels())
print("normal:", is_normal(M1), is_normal(M2))

# %%
# Union: every I1 | I2. Here it is the whole power set.
M = union(M1, M2)
print("I1 + I2 =", M.independents.as_labels())
print("axioms:", check_independence_axioms(M.independents))

# %%
# Intersection: {a} cannot be augmented from {b, c}.
report = family_intersection_probe(M1, M2)
print(report.failed_axiom, report.describe_witness())
