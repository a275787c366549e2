"""Honeycomb lattice on a torus, paths, and path calculus.

Geometry conventions (deterministic, used everywhere downstream):

* Unit cell (x, y) with 0 <= x, y < L owns three edges and two vertices.
  Edge id = 3*(y*L + x) + t with type t in {0, 1, 2}; vertex id =
  2*(y*L + x) + s with sublattice s in {0 (U), 1 (D)}.
* Edge connectivity:  t=0: U(x,y)-D(x,y);  t=1: D(x,y)-U(x+1,y);
  t=2: D(x,y)-U(x,y+1)  (all coordinates mod L).
* Plaquette id = y*L + x names the hexagon whose vertex cycle is
  U(x,y), D(x,y), U(x+1,y), D(x+1,y-1), U(x+1,y-1), D(x,y-1).
* Drawing y upward and x rightward, U(x,y) is the top-left corner of
  hexagon (x,y) and D(x,y) its top corner.  Interior edges carry local
  labels 1..6 along the traversal fixed by ``LABEL_ROTATION`` /
  ``LABEL_REFLECT`` below; the outer leg with label j+6 hangs at the
  vertex shared by interior edges j and j+1 (label 0 meaning 6).
* At every vertex the three incident edges are stored in counterclockwise
  order, which fixes a global orientation of the torus (used by the
  crossing classifier and by dual-path side choices).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .exceptions import (
    InvalidPath,
    NoDualPath,
    OddPlaquetteCount,
    SizeTooSmall,
)

# Local-label convention for plaquettes, fixed so that the generalized
# plaquette operators are Hermitian involutions that all commute (the
# relation checks in the ops tests are the arbiter).  Rotation shifts the
# starting interior edge along the base traversal; reflect reverses it.
LABEL_ROTATION = 0
LABEL_REFLECT = False


class Lattice:
    """Immutable honeycomb torus with L x L unit cells."""

    def __init__(self, L: int, _rotation: int = None, _reflect: bool = None):
        if L < 2:
            raise SizeTooSmall(f"torus size must be at least 2, got {L}")
        if L % 2:
            raise OddPlaquetteCount(
                f"L={L} gives an odd number of plaquettes; the code requires an even count"
            )
        rotation = LABEL_ROTATION if _rotation is None else _rotation
        reflect = LABEL_REFLECT if _reflect is None else _reflect
        self.L = L
        self.edge_count = 3 * L * L
        self.vertex_count = 2 * L * L
        self.plaquette_count = L * L

        self._build_tables(rotation, reflect)

    # -- index helpers -------------------------------------------------------

    def cell(self, x: int, y: int) -> int:
        L = self.L
        return (y % L) * L + (x % L)

    def edge_id(self, x: int, y: int, t: int) -> int:
        return 3 * self.cell(x, y) + t

    def vertex_id(self, x: int, y: int, s: int) -> int:
        return 2 * self.cell(x, y) + s

    def plaquette_id(self, x: int, y: int) -> int:
        return self.cell(x, y)

    def edge_type(self, e: int) -> int:
        return e % 3

    # -- construction --------------------------------------------------------

    def _build_tables(self, rotation: int, reflect: bool) -> None:
        L = self.L
        E, V, P = self.edge_count, self.vertex_count, self.plaquette_count

        endpoints = np.zeros((E, 2), dtype=np.int32)
        for y in range(L):
            for x in range(L):
                U = self.vertex_id(x, y, 0)
                D = self.vertex_id(x, y, 1)
                endpoints[self.edge_id(x, y, 0)] = (U, D)
                endpoints[self.edge_id(x, y, 1)] = (D, self.vertex_id(x + 1, y, 0))
                endpoints[self.edge_id(x, y, 2)] = (D, self.vertex_id(x, y + 1, 0))
        self.edge_endpoints = endpoints

        # Counterclockwise edge order at each vertex (global orientation).
        vtx_ccw = np.zeros((V, 3), dtype=np.int32)
        for y in range(L):
            for x in range(L):
                vtx_ccw[self.vertex_id(x, y, 0)] = (
                    self.edge_id(x, y, 0),
                    self.edge_id(x - 1, y, 1),
                    self.edge_id(x, y - 1, 2),
                )
                vtx_ccw[self.vertex_id(x, y, 1)] = (
                    self.edge_id(x, y, 2),
                    self.edge_id(x, y, 0),
                    self.edge_id(x, y, 1),
                )
        self.vertex_edges = vtx_ccw

        plq_edges = np.zeros((P, 12), dtype=np.int32)
        plq_vertices = np.zeros((P, 6), dtype=np.int32)
        for y in range(L):
            for x in range(L):
                base = [
                    self.edge_id(x, y, 0),
                    self.edge_id(x, y, 1),
                    self.edge_id(x + 1, y - 1, 2),
                    self.edge_id(x + 1, y - 1, 0),
                    self.edge_id(x, y - 1, 1),
                    self.edge_id(x, y - 1, 2),
                ]
                if reflect:
                    base = [base[0]] + base[:0:-1]
                interiors = base[rotation:] + base[:rotation]
                verts, legs = [], []
                for j in range(6):
                    a, b = interiors[j], interiors[(j + 1) % 6]
                    w = self._shared_vertex(a, b)
                    verts.append(w)
                    legs.append(self._third_edge(w, a, b))
                p = self.plaquette_id(x, y)
                plq_edges[p] = interiors + legs
                plq_vertices[p] = verts
        self.plaquette_edges = plq_edges
        self.plaquette_vertices = plq_vertices

        # Edge -> the two plaquettes holding it as an interior edge, and the
        # two "end" plaquettes opposite the edge at each of its endpoints.
        side = [[] for _ in range(E)]
        for p in range(P):
            for e in plq_edges[p, :6]:
                side[e].append(p)
        assert all(len(s) == 2 for s in side)
        self.edge_side_plaquettes = np.array(
            [sorted(s) for s in side], dtype=np.int32
        )

        vplq = [[] for _ in range(V)]
        for p in range(P):
            for w in plq_vertices[p]:
                vplq[w].append(p)
        assert all(len(s) == 3 for s in vplq)
        self.vertex_plaquettes = np.array([sorted(s) for s in vplq], dtype=np.int32)

        end = np.zeros((E, 2), dtype=np.int32)
        for e in range(E):
            for slot, w in enumerate(endpoints[e]):
                opts = [
                    p for p in self.vertex_plaquettes[w]
                    if e not in plq_edges[p, :6]
                ]
                assert len(opts) == 1
                end[e, slot] = opts[0]
        self.edge_end_plaquettes = end

        # Interior-edge bitmask per plaquette (alpha^p over the whole lattice).
        self.plaquette_masks = [
            sum(1 << int(e) for e in plq_edges[p, :6]) for p in range(P)
        ]

    def _shared_vertex(self, a: int, b: int) -> int:
        sa = set(self.edge_endpoints[a])
        sb = set(self.edge_endpoints[b])
        common = sa & sb
        assert len(common) == 1, (a, b)
        return common.pop()

    def _third_edge(self, w: int, a: int, b: int) -> int:
        for e in self.vertex_edges[w]:
            if e != a and e != b:
                return int(e)
        raise AssertionError("trivalent vertex without a third edge")

    # -- small queries --------------------------------------------------------

    def edges_at_vertex(self, v: int) -> Tuple[int, int, int]:
        return tuple(int(e) for e in self.vertex_edges[v])

    def other_endpoint(self, e: int, v: int) -> int:
        a, b = self.edge_endpoints[e]
        return int(b) if v == a else int(a)

    def interior_edges(self, p: int) -> Tuple[int, ...]:
        return tuple(int(e) for e in self.plaquette_edges[p, :6])

    def local_edges(self, p: int) -> Tuple[int, ...]:
        """Global ids of the 12 edges of plaquette p in local-label order."""
        return tuple(int(e) for e in self.plaquette_edges[p])

    def ccw_next(self, v: int, e: int) -> int:
        edges = self.vertex_edges[v]
        i = int(np.where(edges == e)[0][0])
        return int(edges[(i + 1) % 3])

    def left_plaquette(self, e: int, from_vertex: int) -> int:
        """Interior plaquette on the left of edge e traversed away from from_vertex."""
        partner = self.ccw_next(from_vertex, e)
        for p in self.edge_side_plaquettes[e]:
            if partner in self.plaquette_edges[p, :6]:
                return int(p)
        raise AssertionError("left plaquette not found")

    def __repr__(self):
        return f"Lattice(L={self.L}, edges={self.edge_count})"


def build_torus(L: int) -> Lattice:
    """Honeycomb torus with L x L cells; L must be even and at least 2."""
    return Lattice(L)


# ---------------------------------------------------------------------------
# Paths
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Path:
    """Ordered edge walk; edges[k] connects vertices[k] to vertices[k+1]."""

    lattice: Lattice = field(repr=False)
    edges: Tuple[int, ...]
    vertices: Tuple[int, ...]

    @property
    def closed(self) -> bool:
        return len(self.edges) > 0 and self.vertices[0] == self.vertices[-1]

    def __len__(self):
        return len(self.edges)

    def edge_mask(self) -> int:
        m = 0
        for e in self.edges:
            m ^= 1 << e
        return m

    def reversed(self) -> "Path":
        return Path(self.lattice, self.edges[::-1], self.vertices[::-1])

    def cycle_vertices(self) -> Tuple[int, ...]:
        """Vertex list without the duplicated closing vertex."""
        return self.vertices[:-1] if self.closed else self.vertices


def path_from_edges(
    lattice: Lattice, edges: Sequence[int], start_vertex: Optional[int] = None
) -> Path:
    """Build a Path from an edge sequence, deriving the vertex walk.

    For a single edge the direction is ambiguous; it defaults to starting at
    the lower-numbered endpoint unless start_vertex says otherwise.
    """
    edges = [int(e) for e in edges]
    if not edges:
        raise InvalidPath("empty edge list")
    for e in edges:
        if not (0 <= e < lattice.edge_count):
            raise InvalidPath(f"edge {e} outside lattice")
    a0, b0 = (int(v) for v in lattice.edge_endpoints[edges[0]])
    if len(edges) == 1:
        v0 = min(a0, b0) if start_vertex is None else start_vertex
        if v0 not in (a0, b0):
            raise InvalidPath("start_vertex not an endpoint of the first edge")
        return Path(lattice, tuple(edges), (v0, lattice.other_endpoint(edges[0], v0)))
    second = set(int(v) for v in lattice.edge_endpoints[edges[1]])
    if start_vertex is not None:
        if start_vertex not in (a0, b0):
            raise InvalidPath("start_vertex not an endpoint of the first edge")
        v0 = start_vertex
    else:
        if a0 in second and b0 in second:
            raise InvalidPath("first two edges coincide")
        v0 = a0 if b0 in second else b0
        if a0 not in second and b0 not in second:
            raise InvalidPath("edges 0 and 1 do not share a vertex")
    verts = [v0]
    cur = lattice.other_endpoint(edges[0], v0)
    verts.append(cur)
    for k in range(1, len(edges)):
        a, b = (int(v) for v in lattice.edge_endpoints[edges[k]])
        if cur not in (a, b):
            raise InvalidPath(f"edges {k-1} and {k} do not share a vertex")
        cur = lattice.other_endpoint(edges[k], cur)
        verts.append(cur)
    return Path(lattice, tuple(edges), tuple(verts))


def conn(lattice: Lattice, path: Path) -> Tuple[int, ...]:
    """Support of the string operator: path edges plus all incident legs."""
    out = set()
    for v in path.vertices:
        out.update(int(e) for e in lattice.vertex_edges[v])
    return tuple(sorted(out))


def b_set(lattice: Lattice, path: Path) -> Tuple[int, ...]:
    """Plaquettes with at least one interior edge inside conn(path)."""
    support = set(conn(lattice, path))
    out = [
        p
        for p in range(lattice.plaquette_count)
        if support.intersection(lattice.interior_edges(p))
    ]
    return tuple(out)


# ---------------------------------------------------------------------------
# Crossing classification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CrossingReport:
    n_crossings: int
    p_self_crossing: bool
    p_self_overlapping: bool
    q_self_crossing: bool
    q_self_overlapping: bool
    # Whether every maximal common region kept the open-path endpoints out,
    # i.e. whether the paths "cross" in the strict sense of the definition.
    all_regions_endpoint_free: bool = True


def is_self_crossing(path: Path) -> bool:
    verts = path.cycle_vertices()
    return len(set(verts)) != len(verts)


def is_self_overlapping(lattice: Lattice, path: Path) -> bool:
    verts = path.cycle_vertices()
    n = len(verts)
    pos: Dict[int, List[int]] = {}
    for i, v in enumerate(verts):
        pos.setdefault(v, []).append(i)
    for p in range(lattice.plaquette_count):
        hits: List[int] = []
        for v in self_unique(lattice.plaquette_vertices[p]):
            hits.extend(pos.get(int(v), ()))
        if len(hits) < 2:
            continue
        if not _single_run(sorted(hits), n, path.closed):
            return True
    return False


def self_unique(arr) -> List[int]:
    return list(dict.fromkeys(int(v) for v in arr))


def _single_run(sorted_positions: List[int], n: int, cyclic: bool) -> bool:
    k = len(sorted_positions)
    if k <= 1:
        return True
    span = sorted_positions[-1] - sorted_positions[0]
    if span == k - 1:
        return True
    if cyclic:
        # A cyclic run has exactly one gap bigger than 1 around the circle.
        gaps = [
            (sorted_positions[(i + 1) % k] - sorted_positions[i]) % n
            for i in range(k)
        ]
        return sum(1 for g in gaps if g != 1) <= 1
    return False


def _regions(p: Path, q: Path) -> List[Tuple[int, int]]:
    """Maximal common-edge runs as inclusive P-index ranges [i, i']."""
    ip = {e: k for k, e in enumerate(p.edges)}
    iq = {e: k for k, e in enumerate(q.edges)}
    common = [k for k, e in enumerate(p.edges) if e in iq]
    if not common:
        return []
    np_, nq = len(p.edges), len(q.edges)
    cyc_p, cyc_q = p.closed, q.closed

    order = common
    if cyc_p:
        common_set = set(common)
        if len(common_set) == np_:
            # Fully shared closed paths: no meaningful region structure.
            return []
        start = next(k for k in range(np_) if (k - 1) % np_ not in common_set
                     and k in common_set)
        order = []
        k = start
        for _ in range(np_):
            if k in common_set:
                order.append(k)
            k = (k + 1) % np_
        order = [k for k in order]

    regions: List[List[int]] = []
    cur: List[int] = []
    prev_q = None
    direction = 0
    for k in order:
        qk = iq[p.edges[k]]
        if cur:
            p_adj = (k - cur[-1]) % np_ == 1 if cyc_p else k - cur[-1] == 1
            dq = (qk - prev_q)
            if cyc_q:
                if dq % nq == 1:
                    dq = 1
                elif dq % nq == nq - 1:
                    dq = -1
            q_adj = dq in (1, -1) and (direction in (0, dq))
            if p_adj and q_adj:
                cur.append(k)
                if direction == 0:
                    direction = dq
                prev_q = qk
                continue
        if cur:
            regions.append(cur)
        cur = [k]
        prev_q = qk
        direction = 0
    if cur:
        regions.append(cur)
    return [(r[0], r[-1]) for r in regions]


def _side(lattice: Lattice, v: int, ref: int, other: int) -> int:
    """+1 if other is the next edge counterclockwise after ref at v, else -1.

    With ref directed away from v along the travel direction, +1 means
    "other hangs on the left".
    """
    edges = lattice.vertex_edges[v]
    i = int(np.where(edges == ref)[0][0])
    return 1 if int(edges[(i + 1) % 3]) == other else -1


def _region_crosses(lattice: Lattice, p: Path, q: Path, i0: int, i1: int) -> Optional[bool]:
    """Apply endpoint and orientation conditions to one common region.

    Returns None when the endpoint condition fails (region is not a crossing
    candidate at all), else whether the orientation condition holds.
    """
    np_ = len(p.edges)
    span = (i1 - i0) % np_ + 1
    lam = {p.vertices[(i0 + j) % np_] for j in range(span + 1)}
    if not p.closed and (p.vertices[0] in lam or p.vertices[-1] in lam):
        return None
    if not q.closed and (q.vertices[0] in lam or q.vertices[-1] in lam):
        return None
    # Predecessor and successor edges of P around the region (cyclic wrap for
    # closed paths; for open paths the endpoint condition above guarantees
    # they exist).
    pred = p.edges[(i0 - 1) % np_]
    succ = p.edges[(i1 + 1) % np_]
    w0 = p.vertices[i0 % np_]
    w1 = p.vertices[(i1 + 1) % np_]
    c_first = p.edges[i0 % np_]
    c_last = p.edges[i1 % np_]
    side0 = _side(lattice, w0, c_first, pred)
    # c_last points back into the region at w1, so flip the side reading.
    side1 = -_side(lattice, w1, c_last, succ)
    return side0 != side1


def classify_paths(lattice: Lattice, p: Path, q: Path) -> CrossingReport:
    """Count crossings of two paths and flag self-crossing / self-overlap."""
    n = 0
    endpoint_free = True
    for (i0, i1) in _regions(p, q):
        res = _region_crosses(lattice, p, q, i0, i1)
        if res is None:
            endpoint_free = False
        elif res:
            n += 1
    return CrossingReport(
        n_crossings=n,
        p_self_crossing=is_self_crossing(p),
        p_self_overlapping=is_self_overlapping(lattice, p),
        q_self_crossing=is_self_crossing(q),
        q_self_overlapping=is_self_overlapping(lattice, q),
        all_regions_endpoint_free=endpoint_free,
    )


# ---------------------------------------------------------------------------
# Dual paths
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DualPath:
    """Walk on plaquettes; crossed_edges[k] separates plaquettes k and k+1."""

    plaquettes: Tuple[int, ...]
    crossed_edges: Tuple[int, ...]

    @property
    def closed(self) -> bool:
        return len(self.plaquettes) > 1 and self.plaquettes[0] == self.plaquettes[-1]


def end_plaquette(lattice: Lattice, e: int, v: int) -> int:
    """Plaquette at endpoint v of e whose interior excludes e (the plaquette
    "opposite" the edge at that endpoint)."""
    a, b = lattice.edge_endpoints[e]
    slot = 0 if v == a else 1
    return int(lattice.edge_end_plaquettes[e, slot])


def dual_path_for_negative_chirality(lattice: Lattice, path: Path) -> DualPath:
    """Dual path inside conn(path) hosting the sigma^z dressing of S^-.

    Open paths: shortest dual route between the plaquettes opposite the first
    and last edges.  Closed paths: the ring of left-side plaquettes, crossing
    the legs that hang on the left of the traversal.
    """
    support = set(conn(lattice, path))
    if path.closed:
        plqs: List[int] = []
        crossed: List[int] = []
        nverts = len(path.edges)
        lps = [
            lattice.left_plaquette(path.edges[k], path.vertices[k])
            for k in range(nverts)
        ]
        for k in range(nverts):
            nxt = lps[(k + 1) % nverts]
            if lps[k] != nxt:
                w = path.vertices[(k + 1) % nverts]
                leg = lattice._third_edge(
                    w, path.edges[k], path.edges[(k + 1) % nverts]
                )
                if leg not in support:
                    raise NoDualPath("left leg left the string support")
                if not plqs:
                    plqs.append(lps[k])
                crossed.append(leg)
                plqs.append(nxt)
        if not plqs:
            # Traversal with the loop interior on its left: the dual path
            # degenerates to a single plaquette and an empty sigma^z dressing.
            return DualPath((lps[0],), ())
        if plqs[0] != plqs[-1]:
            plqs.append(plqs[0])
            # close the ring: last step shares the wrap leg
        return DualPath(tuple(plqs), tuple(crossed))

    start = end_plaquette(lattice, path.edges[0], path.vertices[0])
    goal = end_plaquette(lattice, path.edges[-1], path.vertices[-1])
    # Dual adjacency restricted to edges of the support.
    adj: Dict[int, List[Tuple[int, int]]] = {}
    for e in sorted(support):
        pa, pb = (int(x) for x in lattice.edge_side_plaquettes[e])
        adj.setdefault(pa, []).append((pb, e))
        adj.setdefault(pb, []).append((pa, e))
    prev: Dict[int, Tuple[int, int]] = {start: (-1, -1)}
    frontier = [start]
    while frontier and goal not in prev:
        nxt: List[int] = []
        for pcur in frontier:
            for pn, via in sorted(adj.get(pcur, ())):
                if pn not in prev:
                    prev[pn] = (pcur, via)
                    nxt.append(pn)
        frontier = nxt
    if goal not in prev:
        raise NoDualPath("no dual route between end plaquettes inside the support")
    plqs = [goal]
    crossed = []
    cur = goal
    while cur != start:
        cur, via = prev[cur]
        plqs.append(cur)
        crossed.append(via)
    return DualPath(tuple(reversed(plqs)), tuple(reversed(crossed)))


# ---------------------------------------------------------------------------
# Ready-made paths and random generation
# ---------------------------------------------------------------------------


def straight_cycle(lattice: Lattice, direction: str, offset: int = 0) -> Path:
    """Homologically non-trivial cycle along 'h' or 'v', length 2L."""
    L = lattice.L
    edges: List[int] = []
    if direction == "h":
        for x in range(L):
            edges.append(lattice.edge_id(x, offset, 0))
            edges.append(lattice.edge_id(x, offset, 1))
        start = lattice.vertex_id(0, offset, 0)
    elif direction == "v":
        for y in range(L):
            edges.append(lattice.edge_id(offset, y, 0))
            edges.append(lattice.edge_id(offset, y, 2))
        start = lattice.vertex_id(offset, 0, 0)
    else:
        raise ValueError("direction must be 'h' or 'v'")
    return path_from_edges(lattice, edges, start_vertex=start)


def hexagon_path(lattice: Lattice, p: int) -> Path:
    """Closed path around the interior of plaquette p."""
    interiors = lattice.interior_edges(p)
    return path_from_edges(lattice, interiors)


def random_open_path(
    lattice: Lattice, rng: random.Random, max_len: int, min_len: int = 1
) -> Path:
    """Self-avoiding open walk with between min_len and max_len edges."""
    while True:
        target = rng.randint(min_len, max_len)
        v = rng.randrange(lattice.vertex_count)
        verts = [v]
        edges: List[int] = []
        seen = {v}
        while len(edges) < target:
            options = [
                e
                for e in lattice.edges_at_vertex(verts[-1])
                if lattice.other_endpoint(e, verts[-1]) not in seen
            ]
            if not options:
                break
            e = rng.choice(options)
            w = lattice.other_endpoint(e, verts[-1])
            edges.append(e)
            verts.append(w)
            seen.add(w)
        if len(edges) >= min_len:
            return Path(lattice, tuple(edges), tuple(verts))


def random_closed_loop(lattice: Lattice, rng: random.Random) -> Path:
    """Random contractible loop: a hexagon or the boundary of two hexagons."""
    if rng.random() < 0.5:
        return hexagon_path(lattice, rng.randrange(lattice.plaquette_count))
    # Boundary of two adjacent hexagons (a 10-cycle).
    e = rng.randrange(lattice.edge_count)
    pa, pb = (int(x) for x in lattice.edge_side_plaquettes[e])
    mask = lattice.plaquette_masks[pa] ^ lattice.plaquette_masks[pb]
    edges = [k for k in range(lattice.edge_count) if (mask >> k) & 1]
    return order_cycle(lattice, edges)


def order_cycle(lattice: Lattice, edges: Sequence[int]) -> Path:
    """Order an unordered edge set forming a single cycle into a Path."""
    at: Dict[int, List[int]] = {}
    for e in edges:
        for v in lattice.edge_endpoints[e]:
            at.setdefault(int(v), []).append(int(e))
    if any(len(v) != 2 for v in at.values()):
        raise InvalidPath("edge set is not a disjoint cycle")
    e0 = min(edges)
    v0 = int(min(lattice.edge_endpoints[e0]))
    ordered = [e0]
    cur = lattice.other_endpoint(e0, v0)
    while cur != v0:
        nxt = [e for e in at[cur] if e != ordered[-1]]
        ordered.append(nxt[0])
        cur = lattice.other_endpoint(nxt[0], cur)
    if len(ordered) != len(edges):
        raise InvalidPath("edge set contains more than one cycle")
    return path_from_edges(lattice, ordered, start_vertex=v0)
