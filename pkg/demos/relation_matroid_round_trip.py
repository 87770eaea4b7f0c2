"""
From relations to matroids and back
===================================

Build the matroid of a relation, read a relation off a matroid, and check
the claims connecting the two over every relation on four points.
"""

from roughmatroid import (
    Universe,
    induced_matroid,
    induced_relation,
    make_relation,
    matroid_from_circuits,
    union_relation_check,
    verify_propositions,
)
from roughmatroid.grids import all_pers, letters

u = Universe(("a", "b", "c"))
R = make_relation(u, [("a", "a"), ("a", "b"), ("b", "a"), ("b", "b")])

# %%
# Going around once adds the missing diagonal entry (c, c).
M = induced_matroid(R).matroid
print("I(R) =", M.independent_sets().as_labels())
print("R(M(R)) =", sorted(induced_relation(M).pairs))

# %%
# Circuits of size three contribute nothing to the relation.
print(sorted(induced_relation(matroid_from_circuits(u, ["abc"])).pairs))

# %%
# The union of two induced matroids can have circuits: with one class of
# three elements on both sides, {a, b, c} is dependent.
full = make_relation(u, [(x, y) for x in "abc" for y in "abc"])
res = union_relation_check(full, full)
print("union circuits:", res.union_circuits.as_labels(), "off-diagonal pairs:", res.off_diagonal_pairs)

# %%
# Every claim over the 52 symmetric and transitive relations on four points.
grid = list(all_pers(letters(4)))
for rep in verify_propositions(grid):
    status = "holds" if rep.holds else "fails"
    print(f"{rep.proposition:9s} {status:5s} {rep.instances_checked} instances")
