"""Dev tool: dissect single-error decoding failures at L=2."""

import random
import sys

sys.path.insert(0, "src")

from semionlab.lattice import Lattice
from semionlab.qec import (
    ErrorEvent,
    decode,
    extract_syndrome,
    logical_signature,
    logical_ops,
    reference_state,
)
from semionlab.state import apply

lat = Lattice(2)
logicals = logical_ops(lat)
base = reference_state(lat, logicals)
ref = logical_signature(base, logicals)
print("reference:", ref)

for e in range(lat.edge_count):
    for kind in ("x", "z"):
        ev = ErrorEvent(1 << e, 0) if kind == "x" else ErrorEvent(0, 1 << e)
        rng = random.Random(f"probe:{e}:{kind}")
        state = apply(ev.operator(), base)
        syndrome, state = extract_syndrome(state, rng)
        corr = decode(lat, syndrome)
        state = apply(corr, state)
        post, state = extract_syndrome(state, rng)
        sig = logical_signature(state, logicals)
        if sig != ref or not post.trivial:
            print(
                f"FAIL {kind} edge {e} (type {e % 3}): "
                f"verts={syndrome.excited_vertices()} "
                f"flux={syndrome.excited_plaquettes()} "
                f"corr_flip={[k for k in range(12) if (corr.flip >> k) & 1]} "
                f"corr_diag_edges={sorted({x for t in corr.terms for x in t.edges})} "
                f"sig={sig}"
            )

# geometry reference
for e in range(lat.edge_count):
    print(
        f"edge {e} type {e%3}: endpoints {tuple(lat.edge_endpoints[e])} "
        f"side {tuple(lat.edge_side_plaquettes[e])} end {tuple(lat.edge_end_plaquettes[e])}"
    )
