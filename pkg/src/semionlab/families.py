"""Generated path-pair families with known crossing numbers.

Used by the crossing verification command and the acceptance suite: each
generator produces open, non-self-crossing, non-self-overlapping path pairs
whose crossing count is certified by the classifier before use.
"""

from __future__ import annotations

import random
from typing import List, Tuple

from .lattice import (
    Lattice,
    Path,
    classify_paths,
    conn,
    path_from_edges,
)


def _clean(lattice: Lattice, p: Path, q: Path) -> bool:
    rep = classify_paths(lattice, p, q)
    return not (
        rep.p_self_crossing
        or rep.p_self_overlapping
        or rep.q_self_crossing
        or rep.q_self_overlapping
    ) and rep.all_regions_endpoint_free


def plus_sign_pair(lattice: Lattice, e: int, variant: int) -> Tuple[Path, Path]:
    """Two 3-edge paths sharing the middle edge e; one variant crosses once,
    the other touches without crossing."""
    u, v = (int(x) for x in lattice.edge_endpoints[e])
    au = [x for x in lattice.edges_at_vertex(u) if x != e]
    bv = [x for x in lattice.edges_at_vertex(v) if x != e]
    if variant:
        bv = bv[::-1]
    p = path_from_edges(lattice, [au[0], e, bv[0]])
    q = path_from_edges(lattice, [au[1], e, bv[1]])
    return p, q


def hexagon_weave_pair(lattice: Lattice, plq: int) -> Tuple[Path, Path]:
    """Six-edge paths running along opposite sides of one hexagon, sharing
    the two opposite interior edges: they cross twice."""
    ints = lattice.interior_edges(plq)
    legs = tuple(lattice.local_edges(plq)[6:])
    # legs[j] hangs at the vertex between interior j and j+1 (0-based)
    p = path_from_edges(lattice, [legs[5], ints[0], ints[1], ints[2], ints[3], legs[3]])
    q = path_from_edges(lattice, [legs[0], ints[0], ints[5], ints[4], ints[3], legs[2]])
    return p, q


def ladder_weave_pair(lattice: Lattice, x: int, y: int) -> Tuple[Path, Path]:
    """Two 11-edge paths weaving through three hexagons in a row, sharing the
    three vertical rungs: they cross three times."""
    eid = lattice.edge_id
    p_edges = [
        eid(x - 1, y, 1),
        eid(x, y - 1, 2),
        eid(x, y - 1, 1),
        eid(x + 1, y - 1, 0),
        eid(x + 1, y - 1, 2),
        eid(x + 1, y, 0),
        eid(x + 1, y, 1),
        eid(x + 2, y - 1, 2),
        eid(x + 2, y - 1, 1),
        eid(x + 3, y - 1, 0),
        eid(x + 3, y - 1, 1),
    ]
    q_edges = [
        eid(x, y - 1, 0),
        eid(x, y - 1, 2),
        eid(x, y, 0),
        eid(x, y, 1),
        eid(x + 1, y - 1, 2),
        eid(x + 1, y - 1, 1),
        eid(x + 2, y - 1, 0),
        eid(x + 2, y - 1, 2),
        eid(x + 2, y, 0),
        eid(x + 2, y, 1),
        eid(x + 3, y, 0),
    ]
    p = path_from_edges(lattice, p_edges, start_vertex=lattice.vertex_id(x - 1, y, 1))
    q = path_from_edges(lattice, q_edges, start_vertex=lattice.vertex_id(x, y - 1, 0))
    return p, q


def disjoint_pair(lattice: Lattice, rng: random.Random) -> Tuple[Path, Path]:
    """Two short paths with disjoint supports (trivially non-crossing)."""
    from .lattice import random_open_path

    while True:
        p = random_open_path(lattice, rng, max_len=3)
        q = random_open_path(lattice, rng, max_len=3)
        if not set(conn(lattice, p)) & set(conn(lattice, q)):
            return p, q


def crossing_family(
    lattice: Lattice, n: int, count: int, seed: int = 0
) -> List[Tuple[Path, Path]]:
    """`count` clean path pairs crossing exactly n times (n in 0..3)."""
    rng = random.Random(f"family:{n}:{seed}")
    out: List[Tuple[Path, Path]] = []
    if n == 0:
        # Alternate touching-without-crossing and disjoint-support pairs.
        edges = list(range(lattice.edge_count))
        rng.shuffle(edges)
        for e in edges:
            for variant in (0, 1):
                p, q = plus_sign_pair(lattice, e, variant)
                rep = classify_paths(lattice, p, q)
                if rep.n_crossings == 0 and _clean(lattice, p, q):
                    out.append((p, q))
                    break
            if len(out) >= (count + 1) // 2:
                break
        while len(out) < count:
            out.append(disjoint_pair(lattice, rng))
    elif n == 1:
        edges = list(range(lattice.edge_count))
        rng.shuffle(edges)
        for e in edges:
            for variant in (0, 1):
                p, q = plus_sign_pair(lattice, e, variant)
                rep = classify_paths(lattice, p, q)
                if rep.n_crossings == 1 and _clean(lattice, p, q):
                    out.append((p, q))
                    break
            if len(out) >= count:
                break
    elif n == 2:
        plqs = list(range(lattice.plaquette_count))
        rng.shuffle(plqs)
        for plq in plqs:
            p, q = hexagon_weave_pair(lattice, plq)
            rep = classify_paths(lattice, p, q)
            if rep.n_crossings == 2 and _clean(lattice, p, q):
                out.append((p, q))
            if len(out) >= count:
                break
    elif n == 3:
        cells = [(x, y) for x in range(lattice.L) for y in range(lattice.L)]
        rng.shuffle(cells)
        for x, y in cells:
            p, q = ladder_weave_pair(lattice, x, y)
            rep = classify_paths(lattice, p, q)
            if rep.n_crossings == 3 and _clean(lattice, p, q):
                out.append((p, q))
            if len(out) >= count:
                break
    else:
        raise ValueError("crossing families cover n in 0..3")
    if len(out) < count:
        raise RuntimeError(f"could not generate {count} pairs with n={n}")
    return out
