"""
From skeleton to K_v
====================

For ``v = 2kl + 1`` the parts are paired into ``K_{2l+1}`` blocks through
infinity, and the remaining edges form ``(K_{2k} - I)[l]``.  Splitting the
skeleton ``K_{2k} - I`` into triangles and pentagons tells us where to lay
copies of ``C_3[l]`` and ``C_5[l]``.  For ``v = (2k+1)l`` the skeleton is
``K_{2k+1}`` and each part gets a Walecki decomposition instead.
"""

import tempfile
from pathlib import Path

from equicycle import construct, verify
from equicycle.certificate import dumps, read, write
from equicycle.skeleton import decompose_into_3_5_cycles, skeleton_host, solve_3m_5n

for order in (5, 6, 8, 10, 11):
    host = skeleton_host(order)
    m, n = solve_3m_5n(host.edge_count())
    decompose_into_3_5_cycles(host, m, n)
    print(f"{host.describe():>20}: {m} triangles, {n} pentagons")

###############################################################################
# Whole systems.

for ell, v in [(7, 43), (7, 35), (9, 45), (11, 89)]:
    s = construct(ell, v)
    print(f"l={ell:2} v={v:3}  {s.route:10}  {len(s.cycles):4} cycles  classes {s.colouring.class_sizes}")

###############################################################################
# Certificates round-trip byte for byte.

s = construct(7, 43)
path = Path(tempfile.mkdtemp()) / "k43.txt"
write(s, path)
again = read(path)
print("identical:", dumps(again) == path.read_text())
print(verify(again).summary())
