"""Dev tool: ground states, loop parity signs, Table I distributions."""

import sys
import time

sys.path.insert(0, "src")

from fractions import Fraction

from semionlab.lattice import Lattice
from semionlab.ops import MonomialOperator
from semionlab.state import (
    apply,
    ground_state,
    in_codespace,
    loop_parity,
    syndrome_distribution,
)

t0 = time.time()
lat = Lattice(4)
g = ground_state(lat, "1")
print(f"L=4 ground support: {g.support_size()}  ({time.time()-t0:.2f}s)")
print("in codespace:", in_codespace(g))

# amplitude signs vs loop parity
ok = True
for cfg, (a, b) in list(g.amps.items())[:2000]:
    nl = loop_parity(lat, cfg)
    expect = (-1) ** nl
    if b != 0 or (a > 0) != (expect > 0):
        ok = False
        print("sign mismatch", cfg, (a, b), nl)
        break
print("amplitudes proportional to (-1)^N_L:", ok)

# Table I: single sigma^x per orientation on the L=4 ground state
for t in (0, 1, 2):
    e = lat.edge_id(1, 1, t)
    u, v = (int(x) for x in lat.edge_endpoints[e])
    side = [int(p) for p in lat.edge_side_plaquettes[e]]
    endp = [int(p) for p in lat.edge_end_plaquettes[e]]
    plqs = [endp[0], side[0], side[1], endp[1]]
    st = apply(MonomialOperator.sigma_x([e]), g)
    t1 = time.time()
    dist = syndrome_distribution(st, plqs)
    nz = {k: str(p) for k, p in sorted(dist.items()) if p}
    print(f"type {t} edge {e} plaquettes (end,side,side,end)={plqs}")
    print(f"  dist: {nz}  ({time.time()-t1:.2f}s)")
    assert sum(dist.values()) == 1
