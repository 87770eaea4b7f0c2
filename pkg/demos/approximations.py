"""
Lower and upper approximations, two ways
========================================

A symmetric and transitive relation on six elements, two query sets, and
the approximations computed from neighborhoods and from matroid circuits.
"""

from roughmatroid import (
    Universe,
    approx_report,
    circuit_approx,
    classes,
    induced_matroid,
    make_relation,
    successor,
)

u = Universe(tuple("abcdef"))
pairs = [("a", "a"), ("a", "b"), ("b", "a"), ("b", "b"), ("a", "d"), ("d", "a"),
         ("b", "d"), ("d", "b"), ("d", "d"), ("c", "c"), ("e", "e")]
R = make_relation(u, pairs)

# %%
# Neighborhoods. f relates to nothing, so it is isolated.
for x in u:
    print(x, sorted(successor(R, x)))
blocks, isolated = classes(R)
print("blocks:", [sorted(b) for b in blocks], "isolated:", sorted(isolated))

# %%
# The induced matroid has one circuit per related pair of distinct elements.
ind = induced_matroid(R)
print("circuits:", ind.circuit_family.as_labels())

# %%
# Both routes give the same approximations and exact ratios.
for X in ("abcef", "acd"):
    by_nbhd = approx_report(R, X)
    by_circuits = circuit_approx(ind, X)
    print(f"X={sorted(X)}  lower={sorted(by_nbhd.lower)}  upper={sorted(by_nbhd.upper)}  "
          f"alpha={by_nbhd.alpha}  rho={by_nbhd.rho}  agree={by_nbhd == by_circuits}")

# %%
# Isolated elements sit in every lower approximation but no upper one, so the
# quality ratio can exceed 1 once the upper set is small enough.
small = make_relation(Universe(("a", "b")), [("a", "a")])
rep = approx_report(small, "a")
print("lower", sorted(rep.lower), "upper", sorted(rep.upper), "alpha", rep.alpha)
