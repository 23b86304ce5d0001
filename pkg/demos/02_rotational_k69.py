"""
Six base cycles for K_69
========================

For ``l = 17`` the vertex set is ``Z_34 x {0,1}`` plus ``inf``.  The mixed
differences are split between ``C_0`` and ``C_1``; ``C_p`` takes mixed 0
and 17 together with a block of pure differences; the two cycles through
infinity absorb whatever pure classes are left.
"""

from equicycle import decompose_k4l1
from equicycle.differences import audit_coverage
from equicycle.rotational import plan_k4l1

plan = plan_k4l1(17)
print("pure class carried by C_0 / C_1: m =", plan.m)
print("0-pure classes on C_p:", sorted(plan.S0))
print("1-pure classes on C_p:", sorted(plan.S1))

###############################################################################
# Who supplies what.

report = audit_coverage(plan.bases, plan.n)
for name, classes in report.ledger().items():
    kinds = {}
    for k in classes:
        kinds.setdefault(k.kind, []).append(k.value)
    print(f"{name:8}", "; ".join(f"{kind}: {vals}" for kind, vals in sorted(kinds.items())))
print("every class covered once:", report.passed)

###############################################################################
# Developing the six bases gives 138 cycles with classes 34 red, 35 blue.

system = decompose_k4l1(17)
print(len(system.cycles), "cycles, classes", system.colouring.class_sizes)

###############################################################################
# The residue of l mod 8 changes how C_0, C_1 and C_p are assembled; the
# construction covers all four cases.

for ell in (15, 17, 19, 21):
    s = decompose_k4l1(ell)
    print(f"l={ell} (l mod 8 = {ell % 8}): m={plan_k4l1(ell).m}, {len(s.cycles)} cycles")
