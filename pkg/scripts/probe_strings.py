"""Dev tool: probe string commutation structure before wiring logicals."""

import sys

sys.path.insert(0, "src")

from semionlab.lattice import (
    Lattice,
    classify_paths,
    path_from_edges,
    straight_cycle,
)
from semionlab.ops import commutation_phase, plaquette_op, vertex_op
from semionlab.strings import (
    build_string,
    crossing_ratio,
    is_canonical,
    path_string_by_segments,
)

lat = Lattice(4)

# Single-edge canonical string: check string-op properties.
e = lat.edge_id(1, 1, 1)
p = path_from_edges(lat, [e])
s = build_string(lat, p)
print("canonical:", is_canonical(s))
u, v = lat.edge_endpoints[e]
for w in range(lat.vertex_count):
    c = commutation_phase(s.op, vertex_op(lat, w))
    expect = 4 if w in (u, v) else 0
    assert c is not None and c.m == expect, (w, c)
print("vertex (anti)commutation pattern OK")
for q in range(lat.plaquette_count):
    c = commutation_phase(s.op, plaquette_op(lat, q))
    assert c is not None and c.m == 0, (q, c)
print("plaquette commutation OK")

# Adjacent single-edge strings: what phase relates S1 S2 and S2 S1?
for e2 in lat.edges_at_vertex(u):
    if e2 == e:
        continue
    s2 = build_string(lat, path_from_edges(lat, [e2]))
    c = crossing_ratio(s, s2)
    print(f"adjacent pair ({e},{e2}): ratio {c}")

# Straight cycles as concatenations of singles.
H = straight_cycle(lat, "h")
V = straight_cycle(lat, "v")
print("H edges:", H.edges, "V edges:", V.edges)
rep = classify_paths(lat, H, V)
print("H/V crossing report:", rep)
SH = path_string_by_segments(lat, H)
SV = path_string_by_segments(lat, V)
print("S_H canonical (invol+herm):", is_canonical(SH))
print("{S_H,S_V} phase:", crossing_ratio(SH, SV))
sq = commutation_phase(SH.op * SH.op, SH.op * SH.op)  # cheap warm check
from semionlab.ops import operators_equal, MonomialOperator
print("S_H^2 == 1:", operators_equal(SH.op * SH.op, MonomialOperator.identity()))

# Do the cycle strings commute with all stabilizers?
ok = True
for q in range(lat.plaquette_count):
    c = commutation_phase(SH.op, plaquette_op(lat, q))
    if c is None or c.m != 0:
        ok = False
        print("S_H vs B", q, c)
for w in range(lat.vertex_count):
    c = commutation_phase(SH.op, vertex_op(lat, w))
    if c is None or c.m != 0:
        ok = False
        print("S_H vs Q", w, c)
print("S_H commutes with all stabilizers:", ok)
