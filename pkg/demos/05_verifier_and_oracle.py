"""
Checking the checker
====================

The verifier only trusts the host graph's edge list.  Here it is shown
catching deliberate corruption, and compared with a naive recount that
shares none of its code.
"""

from equicycle import Cycle, CycleSystem, construct, verify
from equicycle.oracle import enumerate_graceful, exact_cover_decompose, oracle_accepts
from equicycle.skeleton import skeleton_host

system = construct(9, 19)

###############################################################################
# Drop a cycle: some edges are left uncovered.

broken = CycleSystem(system.graph, system.cycles[1:], system.colouring, system.provenance)
print(verify(broken).summary())

###############################################################################
# Swap two neighbours inside a cycle: two edges now appear twice.

cycles = list(system.cycles)
vs = list(cycles[0].vertices)
vs[0], vs[1] = vs[1], vs[0]
cycles[0] = Cycle(vs)
print(verify(CycleSystem(system.graph, cycles, system.colouring, system.provenance)).failing())

###############################################################################
# Small ground truth: exhaustive graceful labellings and exact covers.

print(len(enumerate_graceful(8)), "graceful labellings of the 8-vertex path (both directions)")
print(exact_cover_decompose(skeleton_host(7), [3] * 7))
print("oracle agrees:", oracle_accepts(system, 9, class_sizes=(9, 10)) == verify(system).overall)
