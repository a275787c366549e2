"""Monomial operator algebra and the concrete semion-code operators.

Every operator here has the form  |i> -> omega^(phi(i)) |i xor flip>  with
phi a sum of local integer exponent tables.  A "dense" operator carries one
table over its whole support; products of operators stay lazy (a list of
terms with pre-masks recording the flips applied before each factor), which
keeps long string products exact without 2^|support| blowups.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .exceptions import SupportTooLarge
from .lattice import Lattice
from .scalar import UnitPhase

DEFAULT_DENSE_CAP = 1 << 24
# Dense evaluation is preferred below this size even when a lazy check would do.
_SMALL_DENSE = 1 << 20


def support_cap() -> int:
    """Dense-table entry cap; SEMIONLAB_SUPPORT_CAP overrides the default."""
    value = os.environ.get("SEMIONLAB_SUPPORT_CAP")
    return int(value) if value else DEFAULT_DENSE_CAP


def _check_cap(n_edges: int) -> None:
    if 1 << n_edges > support_cap():
        raise SupportTooLarge(
            f"dense table over {n_edges} edges exceeds cap of {support_cap()} entries"
        )


def _gather(idx: np.ndarray, support: Sequence[int], edges: Sequence[int]) -> np.ndarray:
    """Map configuration indices over `support` to indices over `edges`."""
    pos = {e: k for k, e in enumerate(support)}
    out = np.zeros_like(idx)
    for k, e in enumerate(edges):
        out |= ((idx >> np.uint32(pos[e])) & 1) << np.uint32(k)
    return out


def _mask_restrict(mask: int, edges: Sequence[int]) -> int:
    out = 0
    for k, e in enumerate(edges):
        if (mask >> e) & 1:
            out |= 1 << k
    return out


@dataclass(frozen=True)
class PhaseTerm:
    """One local factor of the diagonal phase: table[(i xor premask)|edges]."""

    edges: Tuple[int, ...]
    table: np.ndarray  # int8 exponents mod 8, indexed little-endian by edges
    premask: int = 0  # global bitmask xored into the configuration first


class MonomialOperator:
    """flip-then-phase operator: |i> -> omega^(phi(i)) |i xor flip>."""

    __slots__ = ("support", "flip", "terms")

    def __init__(self, support: Tuple[int, ...], flip: int, terms: Tuple[PhaseTerm, ...]):
        self.support = support
        self.flip = flip
        self.terms = terms

    # -- constructors --------------------------------------------------------

    @classmethod
    def identity(cls) -> "MonomialOperator":
        return cls((), 0, ())

    @classmethod
    def sigma_x(cls, edges: Iterable[int]) -> "MonomialOperator":
        edges = tuple(sorted(set(edges)))
        flip = sum(1 << e for e in edges)
        return cls(edges, flip, ())

    @classmethod
    def sigma_z(cls, edges: Iterable[int]) -> "MonomialOperator":
        # One term per edge keeps the locality structure fine-grained for the
        # exact constancy checks on large composites.
        edges = tuple(sorted(set(edges)))
        single = np.array([0, 4], dtype=np.int8)
        terms = tuple(PhaseTerm((e,), single, 0) for e in edges)
        return cls(edges, 0, terms)

    @classmethod
    def diagonal(cls, edges: Sequence[int], table: np.ndarray) -> "MonomialOperator":
        edges = tuple(edges)
        return cls(tuple(sorted(edges)), 0, (PhaseTerm(edges, np.asarray(table, dtype=np.int8), 0),))

    @classmethod
    def flip_phase(
        cls, edges: Sequence[int], flip_edges: Iterable[int], table: np.ndarray
    ) -> "MonomialOperator":
        edges = tuple(edges)
        flip = sum(1 << e for e in flip_edges)
        support = tuple(sorted(edges))
        return cls(support, flip, (PhaseTerm(edges, np.asarray(table, dtype=np.int8), 0),))

    # -- basic queries --------------------------------------------------------

    def phase_exponent_at(self, config: int) -> int:
        total = 0
        for t in self.terms:
            x = config ^ t.premask
            local = 0
            for k, e in enumerate(t.edges):
                local |= ((x >> e) & 1) << k
            total += int(t.table[local])
        return total % 8

    def phase_at(self, config: int) -> UnitPhase:
        return UnitPhase(self.phase_exponent_at(config))

    @property
    def flip_edges(self) -> Tuple[int, ...]:
        return tuple(k for k in range(self.flip.bit_length()) if (self.flip >> k) & 1)

    def is_diagonal(self) -> bool:
        return self.flip == 0

    # -- dense form ------------------------------------------------------------

    def dense_table(self, support: Optional[Sequence[int]] = None) -> Tuple[Tuple[int, ...], np.ndarray]:
        """Exponent table over `support` (default: own support), cap-checked."""
        if support is None:
            support = self.support
        support = tuple(sorted(support))
        missing = [e for t in self.terms for e in t.edges if e not in support]
        if missing or any(e not in support for e in self.flip_edges):
            raise ValueError("support does not cover the operator")
        n = len(support)
        _check_cap(n)
        idx = np.arange(1 << n, dtype=np.uint32)
        total = np.zeros(1 << n, dtype=np.int16)
        for t in self.terms:
            local = _gather(idx, support, t.edges) ^ np.uint32(_mask_restrict(t.premask, t.edges))
            total += t.table[local]
        return support, (total % 8).astype(np.int8)

    def densified(self, support: Optional[Sequence[int]] = None) -> "MonomialOperator":
        support, table = self.dense_table(support)
        return MonomialOperator(
            support, self.flip, (PhaseTerm(support, table, 0),)
        )

    # -- algebra ----------------------------------------------------------------

    def __mul__(self, other: "MonomialOperator") -> "MonomialOperator":
        """Operator product self @ other (other acts first)."""
        terms = list(other.terms)
        for t in self.terms:
            terms.append(PhaseTerm(t.edges, t.table, t.premask ^ other.flip))
        support = tuple(sorted(set(self.support) | set(other.support)))
        return MonomialOperator(support, self.flip ^ other.flip, tuple(terms))

    def conj_transpose(self) -> "MonomialOperator":
        """Hermitian conjugate: |i> -> conj(phi(i xor flip)) |i xor flip>."""
        terms = tuple(
            PhaseTerm(t.edges, (-t.table) % 8, t.premask ^ self.flip) for t in self.terms
        )
        return MonomialOperator(self.support, self.flip, terms)

    def to_json_dict(self) -> dict:
        support, table = self.dense_table()
        return {
            "support": list(support),
            "flip": hex(_mask_restrict(self.flip, support)),
            "phases": [int(v) for v in table],
        }


def monomial_mul(a: MonomialOperator, b: MonomialOperator) -> MonomialOperator:
    """Product a.b, densified when the union support is small enough."""
    out = a * b
    if 1 << len(out.support) <= _SMALL_DENSE:
        return out.densified()
    return out


# ---------------------------------------------------------------------------
# Exact constancy of lazy phase sums
# ---------------------------------------------------------------------------


def _signed_terms(op: MonomialOperator, sign: int, extra_premask: int = 0):
    return [
        (t.edges, t.table, t.premask ^ extra_premask, sign) for t in op.terms
    ]


def _combine_terms(
    terms: List[Tuple[Tuple[int, ...], np.ndarray, int, int]]
) -> List[Tuple[Tuple[int, ...], np.ndarray]]:
    """Fold premasks and signs into tables and merge terms on equal supports."""
    merged: Dict[Tuple[int, ...], np.ndarray] = {}
    for edges, table, premask, sign in terms:
        pm = np.uint32(_mask_restrict(premask, edges))
        idx = np.arange(len(table), dtype=np.uint32)
        rebased = sign * table[idx ^ pm].astype(np.int32)
        if edges in merged:
            merged[edges] = merged[edges] + rebased
        else:
            merged[edges] = rebased
    return [(edges, tab % 8) for edges, tab in merged.items()]


def _group_constant(vals: np.ndarray, groups: np.ndarray, n_groups: int) -> Optional[np.ndarray]:
    """Per-group common value of vals (mod 8 already applied), or None."""
    lo = np.full(n_groups, 99, dtype=np.int32)
    hi = np.full(n_groups, -1, dtype=np.int32)
    np.minimum.at(lo, groups, vals)
    np.maximum.at(hi, groups, vals)
    if np.any(lo != hi):
        return None
    return lo


def phase_sum_constant(
    terms: List[Tuple[Tuple[int, ...], np.ndarray, int, int]]
) -> Optional[int]:
    """Exact check that sum_k sign_k * table_k((i xor premask_k)|edges) is the
    same for every configuration i; returns the constant exponent or None.

    Small unions are enumerated densely.  A sum of two local tables is checked
    through its factorized structure over the shared variables.  The general
    case is verified edge by edge: a sum of local functions is constant iff
    flipping any single edge never changes it, and the flip delta for edge b
    only involves the terms whose support contains b, so it can be enumerated
    over that local union exactly.
    """
    if not terms:
        return 0
    all_edges = sorted({e for (edges, _, _, _) in terms for e in edges})
    n = len(all_edges)
    if 1 << n <= _SMALL_DENSE:
        idx = np.arange(1 << n, dtype=np.uint32)
        total = np.zeros(1 << n, dtype=np.int32)
        for edges, table, premask, sign in terms:
            local = _gather(idx, all_edges, edges) ^ np.uint32(_mask_restrict(premask, edges))
            total += sign * table[local].astype(np.int32)
        total %= 8
        if np.all(total == total[0]):
            return int(total[0])
        return None

    combined = _combine_terms(terms)
    if len(combined) == 1:
        edges, tab = combined[0]
        return int(tab[0]) if np.all(tab == tab[0]) else None
    if len(combined) == 2:
        (e1, t1), (e2, t2) = combined
        shared = sorted(set(e1) & set(e2))
        nc = len(shared)
        i1 = np.arange(len(t1), dtype=np.uint32)
        i2 = np.arange(len(t2), dtype=np.uint32)
        g1 = _gather(i1, e1, shared)
        g2 = _gather(i2, e2, shared)
        f = _group_constant(t1, g1, 1 << nc)
        g = _group_constant(t2, g2, 1 << nc)
        if f is None or g is None:
            return None
        tot = (f + g) % 8
        return int(tot[0]) if np.all(tot == tot[0]) else None

    base = sum(int(tab[0]) for _, tab in combined)
    for b in all_edges:
        touching = [t for t in combined if b in t[0]]
        local_union = sorted({e for (edges, _) in touching for e in edges})
        m = len(local_union)
        _check_cap(m)
        idx = np.arange(1 << m, dtype=np.uint32)
        bpos = local_union.index(b)
        delta = np.zeros(1 << m, dtype=np.int32)
        for edges, table in touching:
            local = _gather(idx, local_union, edges)
            flip_local = _gather(idx ^ np.uint32(1 << bpos), local_union, edges)
            delta += table[flip_local] - table[local]
        if np.any(delta % 8 != 0):
            return None
    return base % 8


def operators_equal(a: MonomialOperator, b: MonomialOperator) -> bool:
    """Exact equality as operators on the whole Hilbert space."""
    if a.flip != b.flip:
        return False
    diff = _signed_terms(a, +1) + _signed_terms(b, -1)
    return phase_sum_constant(diff) == 0


def commutation_phase(a: MonomialOperator, b: MonomialOperator) -> Optional[UnitPhase]:
    """Phase c with a.b = c * (b.a), or None if no single phase works.

    Flip parts always commute, so the question reduces to whether the phase
    of a.b differs from that of b.a by a configuration-independent amount.
    """
    terms = (
        _signed_terms(b, +1)
        + _signed_terms(a, +1, extra_premask=b.flip)
        + _signed_terms(a, -1)
        + _signed_terms(b, -1, extra_premask=a.flip)
    )
    const = phase_sum_constant(terms)
    if const is None:
        return None
    return UnitPhase(const)


def is_involution_and_hermitian(op: MonomialOperator) -> bool:
    """For unit-phase monomials, op^2 == 1 and op == op^dagger coincide:
    both say phi(i xor flip) == -phi(i) mod 8."""
    terms = _signed_terms(op, +1) + _signed_terms(op, +1, extra_premask=op.flip)
    return phase_sum_constant(terms) == 0


# ---------------------------------------------------------------------------
# Concrete code operators
# ---------------------------------------------------------------------------


def vertex_eigenvalue(config_bits: Iterable[int]) -> int:
    """(-1)^(number of occupied incident edges)."""
    parity = 0
    for b in config_bits:
        parity ^= int(b) & 1
    return -1 if parity else 1


def vertex_op(lattice: Lattice, v: int) -> MonomialOperator:
    """Q_v: diagonal parity check on the three edges at vertex v."""
    return MonomialOperator.sigma_z(lattice.edges_at_vertex(v))


def _local_plaquette_table() -> np.ndarray:
    """Exponent of b_p as a function of the 12-bit local configuration.

    Bit j holds the occupancy of local label j+1: labels 1..6 are the hexagon
    interior in traversal order, 7..12 the legs (leg j+6 at the vertex shared
    by interior edges j and j+1, with label 0 meaning 6).
    """
    idx = np.arange(1 << 12, dtype=np.uint32)
    occ = [((idx >> np.uint32(j)) & 1).astype(np.int32) for j in range(12)]
    emp = [1 - o for o in occ]

    exp = np.zeros(1 << 12, dtype=np.int32)
    # Sign factor: product over j of (-1)^(n-_{j-1} n+_j), with n_0 = n_6.
    for jprev, j in ((5, 0), (0, 1), (1, 2), (2, 3), (3, 4), (4, 5)):
        exp += 4 * occ[jprev] * emp[j]
    # Vertex phase factors (powers of i -> exponent steps of 2).
    exp += 2 * occ[11] * (occ[0] * occ[5] - emp[0] * emp[5])
    exp += 2 * occ[6] * (emp[0] * emp[1] - occ[0] * occ[1])
    exp += 2 * emp[7] * (occ[1] * emp[2] - emp[1] * occ[2])
    exp += 2 * occ[8] * (occ[2] * occ[3] - emp[2] * emp[3])
    exp += 2 * occ[9] * (emp[3] * emp[4] - occ[3] * occ[4])
    exp += 2 * emp[10] * (occ[4] * emp[5] - emp[4] * occ[5])
    return (exp % 8).astype(np.int8)


_LOCAL_BP = _local_plaquette_table()


def plaquette_phase(local_config: int) -> UnitPhase:
    """b_p for a 12-bit local configuration (bit j = occupancy of label j+1)."""
    return UnitPhase(int(_LOCAL_BP[local_config]))


def plaquette_op(lattice: Lattice, p: int) -> MonomialOperator:
    """Generalized plaquette operator B_p as a dense monomial on 12 edges."""
    local = lattice.local_edges(p)
    return MonomialOperator.flip_phase(local, lattice.interior_edges(p), _LOCAL_BP)


def all_vertex_ops(lattice: Lattice) -> List[MonomialOperator]:
    return [vertex_op(lattice, v) for v in range(lattice.vertex_count)]


def all_plaquette_ops(lattice: Lattice) -> List[MonomialOperator]:
    return [plaquette_op(lattice, p) for p in range(lattice.plaquette_count)]
