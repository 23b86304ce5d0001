"""
Equitable cycle systems of C_3[l] and C_5[l]
============================================

``C_s[l]`` is an ``s``-cycle with every vertex replaced by ``l``
independent vertices.  The edges split into two Cayley graphs on
``Z_s x Z_l``: the short steps (second coordinate moves by at most 2) are
covered by a handful of base cycles, the long ones by lifting Hamiltonian
cycles of a circulant graph.
"""

from equicycle.blowup import (
    C5_7_HAMILTONIAN,
    decompose_c3_blowup,
    decompose_c5_blowup,
    project,
    red_positions,
)
from equicycle.hamiltonian import circulant_ham_decomposition
from equicycle.verifier import verify

###############################################################################
# Projection walks once around the parts, then zigzags between two of them.

print("forward:", project(C5_7_HAMILTONIAN, 5))
print("reverse:", project(C5_7_HAMILTONIAN, 5, reversed=True))

###############################################################################
# The long steps: a Hamiltonian decomposition of Cay[Z_13, +-{3..6}].

for c in circulant_ham_decomposition(13).cycles:
    print(c)

###############################################################################
# Every part carries the same red positions, (l+1)/2 of them.

for ell in (7, 9, 11, 13):
    print(ell, sorted(red_positions(ell)))

for ell in (7, 9, 13, 21):
    for build in (decompose_c3_blowup, decompose_c5_blowup):
        s = build(ell)
        print(f"{s.graph.describe():12} {len(s.cycles):4} cycles  {'PASS' if verify(s) else 'FAIL'}")
