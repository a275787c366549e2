"""Dev tool: exercise the QEC loop on small cases."""

import random
import sys
import time

sys.path.insert(0, "src")

from semionlab.lattice import Lattice
from semionlab.qec import (
    ErrorEvent,
    logical_signature,
    readout_operators,
    reference_state,
    run_montecarlo,
    run_trial,
)

t0 = time.time()
lat = Lattice(2)
readout = readout_operators(lat)
base = reference_state(lat)
ref = logical_signature(base, readout)
print("L=2 reference signature:", ref, f"({time.time()-t0:.2f}s)")

fails = 0
nret = 0
for e in range(lat.edge_count):
    for kind in ("x", "z"):
        ev = ErrorEvent(1 << e, 0) if kind == "x" else ErrorEvent(0, 1 << e)
        rng = random.Random(f"probe:{e}:{kind}")
        res = run_trial(lat, base, readout, ref, ev, rng)
        fails += res.failed
        nret += res.returned_to_codespace
print(f"single-error trials: fails={fails} returned={nret}/24 ({time.time()-t0:.2f}s)")

# adversarial: two X half-cycles completing a non-trivial loop must be detected
from semionlab.lattice import straight_cycle
H = straight_cycle(lat, "h")
half = H.edges[: len(H.edges) // 2]
ev = ErrorEvent(sum(1 << e for e in half), 0)
rng = random.Random("adversarial")
res = run_trial(lat, base, readout, ref, ev, rng)
print("half-cycle X error: failed =", res.failed, "returned =", res.returned_to_codespace, res.logical_class)

t1 = time.time()
out = run_montecarlo(2, 0.05, 0.05, 100, 42)
print("MC:", out, f"({time.time()-t1:.2f}s)")
