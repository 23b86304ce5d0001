"""
A 2-rotational 9-cycle system of K_19
=====================================

Vertices are ``Z_9 x {0,1}`` plus a fixed point ``inf``.  Three base cycles
are developed by ``x -> x + 1``; one of them is fixed by the translation,
so the orbit sizes are 9, 9 and 1.
"""

from equicycle import decompose_k2l1, verify
from equicycle.differences import audit_coverage, develop

system = decompose_k2l1(9)
bases = dict(system.provenance["bases"])

for name, c in bases.items():
    print(f"{name:6} {c}  orbit length {develop(c, 9).length}")

###############################################################################
# The colouring alternates by label parity in the two halves, and infinity
# is blue, so the classes have 9 and 10 vertices.

col = system.colouring
print("class sizes (red, blue):", col.class_sizes)
for name, c in bases.items():
    print(f"{name:6} red/blue on the cycle: {col.profile(c)}")

###############################################################################
# Every difference class is supplied by exactly one base cycle.

report = audit_coverage(bases, 9)
for name, classes in report.ledger().items():
    print(f"{name:6}", ", ".join(str(k) for k in sorted(classes)))

print(verify(system).summary())
