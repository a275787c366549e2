"""Dev tool: does the concatenated cycle string square to +1 on the codespace?"""

import sys

sys.path.insert(0, "src")

from semionlab.lattice import Lattice, straight_cycle
from semionlab.strings import path_string_by_segments

lat = Lattice(4)
H = straight_cycle(lat, "h")
V = straight_cycle(lat, "v")

for seg in (1, 2, 4):
    SH = path_string_by_segments(lat, H, segment_len=seg)
    sq = SH.op * SH.op
    assert sq.flip == 0
    # Vertex-free representatives of the four homology sectors.
    configs = {
        "1": 0,
        "H": H.edge_mask(),
        "V": V.edge_mask(),
        "HV": H.edge_mask() ^ V.edge_mask(),
    }
    vals = {k: sq.phase_exponent_at(c) for k, c in configs.items()}
    # also a couple of boundary-deformed members of sector 1
    vals["1+hex"] = sq.phase_exponent_at(lat.plaquette_masks[5])
    vals["1+2hex"] = sq.phase_exponent_at(
        lat.plaquette_masks[5] ^ lat.plaquette_masks[6]
    )
    print(f"segment_len={seg}: S_H^2 exponents per sector: {vals}")

SV = path_string_by_segments(lat, V)
sq = SV.op * SV.op
configs = {"1": 0, "H": H.edge_mask(), "V": V.edge_mask(), "HV": H.edge_mask() ^ V.edge_mask()}
print("S_V^2 exponents:", {k: sq.phase_exponent_at(c) for k, c in configs.items()})
