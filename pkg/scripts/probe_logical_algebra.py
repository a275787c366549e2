"""Dev tool: full logical-operator algebra with 2-edge segmentation."""

import sys

sys.path.insert(0, "src")

from semionlab.lattice import Lattice, dual_path_for_negative_chirality, straight_cycle
from semionlab.ops import commutation_phase, plaquette_op, vertex_op
from semionlab.strings import negative_chirality, path_string_by_segments

lat = Lattice(4)
H = straight_cycle(lat, "h")
V = straight_cycle(lat, "v")
SpH = path_string_by_segments(lat, H, 2)
SpV = path_string_by_segments(lat, V, 2)
SmH = negative_chirality(SpH)
SmV = negative_chirality(SpV)
print("dual H ring:", SmH.dual_path)
print("dual V ring:", SmV.dual_path)

names = {"S+V": SpV, "S+H": SpH, "S-V": SmV, "S-H": SmH}
for na, a in names.items():
    for nb, b in names.items():
        c = commutation_phase(a.op, b.op)
        print(f"{na} vs {nb}: {c}")

# stabilizer commutation for the dressed logicals
ok = True
for q in range(lat.plaquette_count):
    for s in (SmH, SmV):
        c = commutation_phase(s.op, plaquette_op(lat, q))
        if c is None or c.m != 0:
            ok = False
            print("fail B", q, c)
for w in range(lat.vertex_count):
    for s in (SmH, SmV):
        c = commutation_phase(s.op, vertex_op(lat, w))
        if c is None or c.m != 0:
            ok = False
            print("fail Q", w, c)
print("negative logicals commute with stabilizers:", ok)

for name, s in names.items():
    sq = s.op * s.op
    vals = {
        k: sq.phase_exponent_at(c)
        for k, c in {
            "1": 0,
            "H": H.edge_mask(),
            "V": V.edge_mask(),
            "HV": H.edge_mask() ^ V.edge_mask(),
        }.items()
    }
    print(f"{name}^2 sector exponents: {vals}")
