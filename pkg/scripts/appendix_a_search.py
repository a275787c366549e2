"""Dev tool: match the worked single-edge F table against our conventions.

The printed table lists F over 5-bit configurations (i1..i5) with the path
edge at position 3 and the four legs at positions 1, 2, 4, 5 (1, 2 at one
endpoint, 4, 5 at the other).  We search label conventions x edge types x leg
permutations for an exact match of all 32 values.
"""

import itertools
import sys

sys.path.insert(0, "src")

import numpy as np

from semionlab.lattice import Lattice, path_from_edges, conn
from semionlab.strings import build_string

# (i1,i2,i3,i4,i5) -> value, transcribed from the worked example.
TABLE = {
    (0, 0, 0, 0, 0): 1, (1, 1, 0, 0, 0): -1j,
    (1, 0, 1, 1, 0): -1j, (0, 0, 0, 1, 1): -1j,
    (0, 0, 1, 0, 0): 1, (1, 1, 1, 0, 0): 1j,
    (1, 0, 0, 1, 0): 1j, (0, 0, 1, 1, 1): 1j,
    (0, 1, 1, 0, 1): -1j, (1, 1, 1, 1, 1): -1,
    (0, 1, 1, 1, 0): -1j, (1, 0, 0, 0, 1): 1j,
    (0, 1, 0, 0, 1): 1j, (1, 1, 0, 1, 1): -1,
    (0, 1, 0, 1, 0): 1j, (1, 0, 1, 0, 1): -1j,
    (0, 0, 0, 0, 1): 1, (0, 0, 0, 1, 0): 1,
    (1, 1, 0, 0, 1): -1j, (1, 1, 0, 1, 0): -1j,
    (0, 0, 1, 0, 1): 1, (0, 0, 1, 1, 0): 1,
    (1, 1, 1, 0, 1): 1j, (1, 1, 1, 1, 0): 1j,
    (1, 0, 1, 1, 1): -1, (0, 1, 1, 1, 1): -1,
    (0, 1, 1, 0, 0): 1j, (1, 0, 1, 0, 0): 1j,
    (1, 0, 0, 1, 1): -1, (0, 1, 0, 1, 1): -1,
    (0, 1, 0, 0, 0): -1j, (1, 0, 0, 0, 0): -1j,
}

EXP = {1: 0, 1j: 2, -1: 4, -1j: 6}


def try_match(lat, e):
    """Return list of (leg permutation) matches for edge e on this lattice."""
    path = path_from_edges(lat, [e])
    s = build_string(lat, path, canonical=True)
    support, table = s.op.dense_table()
    pos = {edge: k for k, edge in enumerate(support)}
    u, v = (int(x) for x in lat.edge_endpoints[e])
    legs_u = [x for x in lat.edges_at_vertex(u) if x != e]
    legs_v = [x for x in lat.edges_at_vertex(v) if x != e]
    matches = []
    # positions 1,2 take the legs at one endpoint, 4,5 at the other.
    for (a, b) in (tuple(legs_u), tuple(legs_v)), (tuple(legs_v), tuple(legs_u)):
        for p12 in itertools.permutations(a):
            for p45 in itertools.permutations(b):
                order = [p12[0], p12[1], e, p45[0], p45[1]]
                ok = True
                for bits, val in TABLE.items():
                    cfg = 0
                    for bit, edge in zip(bits, order):
                        cfg |= bit << pos[edge]
                    if int(table[cfg]) != EXP[val]:
                        ok = False
                        break
                if ok:
                    matches.append(order)
    return matches


def main():
    for reflect in (False, True):
        for rotation in range(6):
            lat = Lattice(4, _rotation=rotation, _reflect=reflect)
            for t in range(3):
                e = lat.edge_id(1, 1, t)
                m = try_match(lat, e)
                if m:
                    print(
                        f"MATCH rotation={rotation} reflect={reflect} type={t}: {m}"
                    )


if __name__ == "__main__":
    main()
