"""String-operator synthesis and the string calculus.

The phase function of a string operator on path P is fixed class by class:
configurations of conn(P) split into cosets under adding plaquette-interior
loops, each class representative gets a free initial phase, and the rest of
the class is filled by exact ratios of plaquette phases.  Open strings built
this way carry positive chirality; negative chirality is a sigma^z dressing
along a dual path; closed strings of definite chirality come from
concatenating open segments.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from . import gf2
from .exceptions import (
    DualPathOutsideSupport,
    IncompatiblePaths,
    NotGaussianPhase,
    SupportTooLarge,
    UnsupportedPath,
)
from .lattice import (
    DualPath,
    Lattice,
    Path,
    b_set,
    conn,
    dual_path_for_negative_chirality,
)
from .ops import (
    MonomialOperator,
    _LOCAL_BP,
    _check_cap,
    commutation_phase,
    is_involution_and_hermitian,
)
from .scalar import ExactScalar, UnitPhase


def empty_path(lattice: Lattice) -> Path:
    return Path(lattice, (), ())


def bp_exponent(lattice: Lattice, p: int, global_config: int) -> int:
    """Exponent of b_p evaluated on a whole-lattice configuration."""
    local = 0
    for k, e in enumerate(lattice.local_edges(p)):
        local |= ((global_config >> e) & 1) << k
    return int(_LOCAL_BP[local])


def theta(
    lattice: Lattice, path: Path, config: int, plaquettes: Sequence[int]
) -> UnitPhase:
    """Phase ratio relating F values of configurations in one class.

    `config` is a whole-lattice configuration; how it extends beyond conn(path)
    does not affect the result.
    """
    mask_p = path.edge_mask()
    cur = config
    exp = 0
    for p in plaquettes:
        exp += bp_exponent(lattice, p, cur ^ mask_p) - bp_exponent(lattice, p, cur)
        cur ^= lattice.plaquette_masks[p]
    return UnitPhase(exp)


# ---------------------------------------------------------------------------
# Configuration classes
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ConfigClassPartition:
    """Coset structure of conn(P) configurations under plaquette loops."""

    path: Path = field(repr=False)
    conn: Tuple[int, ...]
    b_plaquettes: Tuple[int, ...]
    restricted_masks: Tuple[int, ...]  # alpha^p | conn, aligned with b_plaquettes
    basis_plaquettes: Tuple[int, ...]  # independent subset spanning the masks
    basis_masks: Tuple[int, ...]
    msb_basis: Tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.basis_masks)

    @property
    def class_count(self) -> int:
        return 1 << (len(self.conn) - self.rank)

    def restrict(self, global_mask: int) -> int:
        out = 0
        for k, e in enumerate(self.conn):
            out |= ((global_mask >> e) & 1) << k
        return out

    def expand(self, local_mask: int) -> int:
        out = 0
        for k, e in enumerate(self.conn):
            out |= ((local_mask >> k) & 1) << e
        return out

    def canonical_rep(self, local_config: int) -> int:
        return gf2.gf2_canonical_rep(local_config, self.msb_basis)

    def representatives(self) -> np.ndarray:
        n = len(self.conn)
        _check_cap(n)
        idx = np.arange(1 << n, dtype=np.uint32)
        canon = idx.copy()
        for b in self.msb_basis:
            canon = np.minimum(canon, canon ^ np.uint32(b))
        return idx[canon == idx]


def config_classes(lattice: Lattice, path: Path) -> ConfigClassPartition:
    support = conn(lattice, path)
    plqs = b_set(lattice, path)
    pos = {e: k for k, e in enumerate(support)}
    restricted = []
    for p in plqs:
        m = 0
        for e in lattice.interior_edges(p):
            if e in pos:
                m |= 1 << pos[e]
        restricted.append(m)
    chosen = gf2.gf2_independent_subset(restricted)
    basis_masks = tuple(restricted[i] for i in chosen)
    return ConfigClassPartition(
        path=path,
        conn=support,
        b_plaquettes=plqs,
        restricted_masks=tuple(restricted),
        basis_plaquettes=tuple(plqs[i] for i in chosen),
        basis_masks=basis_masks,
        msb_basis=tuple(gf2.gf2_msb_basis(basis_masks)),
    )


# ---------------------------------------------------------------------------
# String operators
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class StringOperator:
    op: MonomialOperator
    path: Optional[Path] = field(repr=False, default=None)
    chirality: str = "positive"  # positive | negative | z | undetermined
    canonical: bool = False
    provenance: str = "direct"
    segments: Tuple["StringOperator", ...] = ()
    dual_path: Optional[DualPath] = None

    @property
    def support(self):
        return self.op.support

    def to_json_dict(self) -> dict:
        out = self.op.to_json_dict()
        out.update(
            {
                "path": list(self.path.edges) if self.path is not None else None,
                "chirality": self.chirality,
                "canonical": self.canonical,
                "provenance": self.provenance,
            }
        )
        return out


def _ratio_table(
    lattice: Lattice,
    p: int,
    support: Tuple[int, ...],
    mask_p_global: int,
    n: int,
) -> np.ndarray:
    """R_p[x] = exponent of b_p(x xor alpha^P)/b_p(x) on zero-extended configs."""
    pos = {e: k for k, e in enumerate(support)}
    idx = np.arange(1 << n, dtype=np.uint32)
    g = np.zeros(1 << n, dtype=np.uint32)
    pm = 0
    for k, e in enumerate(lattice.local_edges(p)):
        if e in pos:
            g |= ((idx >> np.uint32(pos[e])) & 1) << np.uint32(k)
        if (mask_p_global >> e) & 1:
            pm |= 1 << k
    return _LOCAL_BP[g ^ np.uint32(pm)].astype(np.int32) - _LOCAL_BP[g]


def _as_exponent(value: Union[int, UnitPhase]) -> int:
    return value.m if isinstance(value, UnitPhase) else int(value) % 8


def build_string(
    lattice: Lattice,
    path: Path,
    canonical: bool = True,
    initial_phases: Optional[Dict[int, Union[int, UnitPhase]]] = None,
    verify: bool = True,
) -> StringOperator:
    """Construct a string operator on `path` with a total dense phase table.

    `initial_phases` maps class-representative bitmasks (over conn(path), in
    sorted-edge little-endian order) to unit phases.  For canonical open
    strings the partner class of each seeded class automatically receives the
    conjugate phase; for canonical closed strings the representative phase is
    the principal inverse square root of the closing theta ratio, times an
    optional +-1 from `initial_phases`.
    """
    if len(path.edges) == 0:
        return StringOperator(
            MonomialOperator.identity(), path, "positive", True, "direct"
        )
    part = config_classes(lattice, path)
    support = part.conn
    n = len(support)
    _check_cap(n)
    mask_p_global = path.edge_mask()
    mask_p_local = part.restrict(mask_p_global)
    phases = {k: _as_exponent(v) for k, v in (initial_phases or {}).items()}
    for key in phases:
        if part.canonical_rep(key) != key:
            raise ValueError(f"initial phase key {key} is not a class representative")

    F = np.full(1 << n, -1, dtype=np.int16)
    reps = part.representatives()

    seed_points: List[int] = []
    seed_values: List[int] = []
    if not canonical:
        for r in reps:
            seed_points.append(int(r))
            seed_values.append(phases.get(int(r), 0))
    elif not path.closed:
        seeded = set()
        for r in reps:
            r = int(r)
            if r in seeded:
                continue
            partner_point = r ^ mask_p_local
            partner_rep = part.canonical_rep(partner_point)
            if partner_rep == r:
                raise UnsupportedPath(
                    "open path whose flip keeps a class fixed cannot be paired"
                )
            if partner_rep in seeded:
                continue
            phi = phases.get(r, 0)
            if partner_rep in phases and phases[partner_rep] != (-phi) % 8:
                raise ValueError(
                    "conflicting initial phases for a hermiticity-paired class"
                )
            seed_points.append(r)
            seed_values.append(phi)
            seed_points.append(partner_point)
            seed_values.append((-phi) % 8)
            seeded.add(r)
            seeded.add(partner_rep)
    else:
        subset_idx = gf2.gf2_solve_subset(list(part.restricted_masks), mask_p_local)
        if subset_idx is None:
            raise UnsupportedPath(
                "closed path whose flip is not a sum of plaquette loops"
            )
        subset = [part.b_plaquettes[i] for i in subset_idx]
        cur = reps.astype(np.uint32)
        tval = np.zeros(len(reps), dtype=np.int32)
        for p in subset:
            rp = _ratio_table(lattice, p, support, mask_p_global, n)
            tval += rp[cur]
            cur = cur ^ np.uint32(part.restrict(lattice.plaquette_masks[p]))
        for r, t in zip(reps, tval % 8):
            r, t = int(r), int(t)
            if t % 2:
                raise UnsupportedPath("closing theta ratio is not a fourth root")
            sign = phases.get(r, 0)
            if sign % 4:
                raise ValueError(
                    "canonical closed strings only admit +-1 initial phases"
                )
            seed_points.append(r)
            seed_values.append((((8 - t) % 8) // 2 + sign) % 8)

    F[np.asarray(seed_points, dtype=np.int64)] = np.asarray(seed_values, dtype=np.int16)

    filled = np.asarray(seed_points, dtype=np.uint32)
    for p, mask in zip(part.basis_plaquettes, part.basis_masks):
        rp = _ratio_table(lattice, p, support, mask_p_global, n)
        new = filled ^ np.uint32(mask)
        F[new] = (F[filled] + rp[filled]) % 8
        filled = np.concatenate([filled, new])

    assert not np.any(F < 0), "class fill left configurations unassigned"

    if verify:
        idx = np.arange(1 << n, dtype=np.uint32)
        for k, p in enumerate(part.b_plaquettes):
            rp = _ratio_table(lattice, p, support, mask_p_global, n)
            mask = np.uint32(part.restricted_masks[k])
            if np.any((F[idx ^ mask] - F[idx] - rp) % 8 != 0):
                raise AssertionError(f"string constraint violated at plaquette {p}")

    op = MonomialOperator.flip_phase(support, path.edges, F.astype(np.int8))
    # Direct closed builds mix chiralities in general; only open ones are
    # guaranteed positive.
    chirality = "undetermined" if path.closed else "positive"
    return StringOperator(op, path, chirality, canonical, "direct")


def string_constraints_hold(lattice: Lattice, s: StringOperator) -> bool:
    """Check F(i xor alpha^p) = theta ratio * F(i) for every plaquette and i."""
    part = config_classes(lattice, s.path)
    support, table = s.op.dense_table()
    assert support == part.conn
    n = len(support)
    idx = np.arange(1 << n, dtype=np.uint32)
    mask_p_global = s.path.edge_mask()
    for k, p in enumerate(part.b_plaquettes):
        rp = _ratio_table(lattice, p, support, mask_p_global, n)
        mask = np.uint32(part.restricted_masks[k])
        if np.any((table[idx ^ mask].astype(np.int32) - table[idx] - rp) % 8 != 0):
            return False
    return True


# ---------------------------------------------------------------------------
# Concatenation, chirality dressing, completeness
# ---------------------------------------------------------------------------


def concat(s1: StringOperator, s2: StringOperator) -> StringOperator:
    """String operator for path1 # path2 (path1 traversed first)."""
    if s1.path is None or s2.path is None:
        raise IncompatiblePaths("only path strings can be concatenated")
    if len(s2.path.edges) == 0:
        return s1
    if len(s1.path.edges) == 0:
        return s2
    lat = s1.path.lattice
    if s1.path.vertices[-1] != s2.path.vertices[0]:
        raise IncompatiblePaths("second path must start where the first one ends")
    edges = s1.path.edges + s2.path.edges
    vertices = s1.path.vertices + s2.path.vertices[1:]
    path = Path(lat, edges, vertices)
    chirality = (
        "positive"
        if s1.chirality == s2.chirality == "positive"
        else "undetermined"
    )
    segs = (s1.segments or (s1,)) + (s2.segments or (s2,))
    return StringOperator(
        s2.op * s1.op, path, chirality, False, "concat", segments=segs
    )


def concat_chain(strings: Sequence[StringOperator]) -> StringOperator:
    out = strings[0]
    for s in strings[1:]:
        out = concat(out, s)
    return out


def path_string_by_segments(
    lattice: Lattice, path: Path, segment_len: int = 1
) -> StringOperator:
    """Concatenation of canonical open strings covering `path` in order."""
    pieces = []
    for k in range(0, len(path.edges), segment_len):
        edges = path.edges[k : k + segment_len]
        verts = path.vertices[k : k + len(edges) + 1]
        pieces.append(build_string(lattice, Path(lattice, edges, verts)))
    return concat_chain(pieces)


def z_string(
    lattice: Lattice, dual_or_edges: Union[DualPath, Sequence[int]]
) -> StringOperator:
    """Product of sigma^z along the crossed edges of a dual path."""
    if isinstance(dual_or_edges, DualPath):
        edges = dual_or_edges.crossed_edges
        dual = dual_or_edges
    else:
        edges = tuple(dual_or_edges)
        dual = None
    op = MonomialOperator.sigma_z(edges)
    return StringOperator(op, None, "z", True, "z", dual_path=dual)


def negative_chirality(
    s_plus: StringOperator, dual_path: Optional[DualPath] = None
) -> StringOperator:
    """S^- = S^+ . S^z on a dual path inside the support of S^+."""
    if s_plus.path is None:
        raise IncompatiblePaths("negative chirality needs a path string")
    lat = s_plus.path.lattice
    if dual_path is None:
        dual_path = dual_path_for_negative_chirality(lat, s_plus.path)
    support = set(conn(lat, s_plus.path))
    if not set(dual_path.crossed_edges) <= support:
        raise DualPathOutsideSupport("dual path leaves conn(P)")
    zop = z_string(lat, dual_path)
    overlap = len(set(dual_path.crossed_edges) & set(s_plus.path.edges))
    return StringOperator(
        s_plus.op * zop.op,
        s_plus.path,
        "negative",
        s_plus.canonical and overlap % 2 == 0,
        "z-dressed",
        segments=s_plus.segments,
        dual_path=dual_path,
    )


_CONJ_GAUSS = {0: (1, 0), 2: (0, -1), 4: (-1, 0), 6: (0, 1)}


def pauli_z_decompose(s: StringOperator) -> Dict[Tuple[int, ...], ExactScalar]:
    """Coefficients c(P_z) with X_path = S . sum_z c(z) P_z, via a
    Walsh-Hadamard transform of the conjugated phase table."""
    support, table = s.op.dense_table()
    n = len(support)
    if np.any(table % 2):
        raise NotGaussianPhase("phase table contains odd powers of omega")
    a = np.zeros(1 << n, dtype=np.int64)
    b = np.zeros(1 << n, dtype=np.int64)
    for m, (ra, rb) in _CONJ_GAUSS.items():
        sel = table == m
        a[sel] = ra
        b[sel] = rb
    h = 1
    while h < 1 << n:
        for arr in (a, b):
            view = arr.reshape(-1, 2 * h)
            u = view[:, :h].copy()
            v = view[:, h:].copy()
            view[:, :h] = u + v
            view[:, h:] = u - v
        h *= 2
    out: Dict[Tuple[int, ...], ExactScalar] = {}
    for z in range(1 << n):
        if a[z] or b[z]:
            edges = tuple(support[k] for k in range(n) if (z >> k) & 1)
            out[edges] = ExactScalar(int(a[z]), int(b[z]), n)
    return out


def crossing_ratio(s_p: StringOperator, s_q: StringOperator) -> Optional[UnitPhase]:
    """Configuration-independent phase between S_P S_Q and S_Q S_P, or None."""
    return commutation_phase(s_p.op, s_q.op)


def is_canonical(s: StringOperator) -> bool:
    return is_involution_and_hermitian(s.op)
