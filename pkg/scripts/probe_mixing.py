import sys, time
sys.path.insert(0, "src")
from semionlab.lattice import Lattice, straight_cycle, path_from_edges, classify_paths
from semionlab.strings import build_string, crossing_ratio, path_string_by_segments

lat = Lattice(4)
t0 = time.time()
C = straight_cycle(lat, "h")

# an open path crossing C once: vertical-ish segment through the cycle
x = 1
edges = [lat.edge_id(x, 3, 2), lat.edge_id(x, 0, 0), lat.edge_id(x, 0, 2), lat.edge_id(x, 1, 0)]
O = path_from_edges(lat, edges, start_vertex=lat.vertex_id(x, 0, 1) if False else None)
rep = classify_paths(lat, O, C)
print("O vs C report:", rep)

s_open = path_string_by_segments(lat, O, 1)
direct = build_string(lat, C, canonical=True)
concat = path_string_by_segments(lat, C, 2)
print("direct closed vs open:", crossing_ratio(direct, s_open), f"({time.time()-t0:.1f}s)")
print("concat closed vs open:", crossing_ratio(concat, s_open), f"({time.time()-t0:.1f}s)")

direct_nc = build_string(lat, C, canonical=False)
print("direct (non-canonical seeds=1) vs open:", crossing_ratio(direct_nc, s_open))

import random
rng = random.Random(7)
from semionlab.strings import config_classes
part = config_classes(lat, C)
reps = part.representatives()
seeds = {int(r): rng.randrange(8) for r in reps}
direct_rand = build_string(lat, C, canonical=False, initial_phases=seeds)
print("direct (random seeds) vs open:", crossing_ratio(direct_rand, s_open))
print(f"total {time.time()-t0:.1f}s")
