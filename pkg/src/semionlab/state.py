"""Sparse exact state engine: ground states, measurement statistics, logicals.

States are finite maps from edge-configuration bitmasks to Gaussian-integer
amplitudes with one global dyadic scale 2**-k, so inner products, norms and
measurement probabilities are exact rationals throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .exceptions import NotGaussianPhase, NotVertexFree, StateTooLarge
from .lattice import Lattice, straight_cycle
from .ops import MonomialOperator, plaquette_op, support_cap, vertex_op
from .scalar import ExactScalar, UnitPhase
from .strings import StringOperator, negative_chirality, path_string_by_segments

_GAUSS = {0: (1, 0), 2: (0, 1), 4: (-1, 0), 6: (0, -1)}

# Logical cycle strings are concatenated from two-edge canonical segments;
# with this segmentation their squares act as +1 on the whole codespace.
LOGICAL_SEGMENT_LEN = 2


class SparseState:
    """Unnormalized sparse state: sum_i (a_i + b_i * 1j) * 2**-scale_k |i>."""

    __slots__ = ("lattice", "amps", "scale_k")

    def __init__(self, lattice: Lattice, amps: Dict[int, Tuple[int, int]], scale_k: int = 0):
        self.lattice = lattice
        self.amps = amps
        self.scale_k = scale_k

    @classmethod
    def basis_state(cls, lattice: Lattice, config: int) -> "SparseState":
        return cls(lattice, {config: (1, 0)}, 0)

    def copy(self) -> "SparseState":
        return SparseState(self.lattice, dict(self.amps), self.scale_k)

    def support_size(self) -> int:
        return len(self.amps)

    def norm_sq(self) -> Fraction:
        total = sum(a * a + b * b for a, b in self.amps.values())
        return Fraction(total, 4**self.scale_k)

    def is_zero(self) -> bool:
        return not self.amps

    def amplitude(self, config: int) -> ExactScalar:
        a, b = self.amps.get(config, (0, 0))
        return ExactScalar(a, b, self.scale_k)

    def inner(self, other: "SparseState") -> ExactScalar:
        """<self|other> as an exact scalar."""
        if len(self.amps) > len(other.amps):
            items = other.amps.items()
            a_re = 0
            a_im = 0
            for cfg, (oa, ob) in items:
                sa, sb = self.amps.get(cfg, (0, 0))
                # conj(self) * other
                a_re += sa * oa + sb * ob
                a_im += sa * ob - sb * oa
        else:
            a_re = 0
            a_im = 0
            for cfg, (sa, sb) in self.amps.items():
                oa, ob = other.amps.get(cfg, (0, 0))
                a_re += sa * oa + sb * ob
                a_im += sa * ob - sb * oa
        return ExactScalar(a_re, a_im, self.scale_k + other.scale_k)

    def scaled_equal(self, other: "SparseState") -> bool:
        """Exact equality of the normalized states up to nothing (amplitudes
        compared after aligning the dyadic scales)."""
        k = max(self.scale_k, other.scale_k)
        fs = 1 << (k - self.scale_k)
        fo = 1 << (k - other.scale_k)
        keys = set(self.amps) | set(other.amps)
        for cfg in keys:
            sa, sb = self.amps.get(cfg, (0, 0))
            oa, ob = other.amps.get(cfg, (0, 0))
            if sa * fs != oa * fo or sb * fs != ob * fo:
                return False
        return True


def _check_state_cap(n_entries: int) -> None:
    if n_entries > support_cap():
        raise StateTooLarge(
            f"state support {n_entries} exceeds cap {support_cap()}"
        )


def apply(op, state: SparseState) -> SparseState:
    """Apply a monomial operator (or StringOperator) to a state, exactly."""
    if isinstance(op, StringOperator):
        op = op.op
    out: Dict[int, Tuple[int, int]] = {}
    flip = op.flip
    for cfg, (a, b) in state.amps.items():
        m = op.phase_exponent_at(cfg)
        try:
            ra, rb = _GAUSS[m]
        except KeyError:
            raise NotGaussianPhase(
                f"operator phase omega**{m} cannot scale a Gaussian amplitude"
            )
        na = a * ra - b * rb
        nb = a * rb + b * ra
        if na or nb:
            out[cfg ^ flip] = (na, nb)
    return SparseState(state.lattice, out, state.scale_k)


def apply_projector(op: MonomialOperator, sign: int, state: SparseState) -> SparseState:
    """Apply (1 + sign*op)/2 for an involutive monomial operator."""
    out: Dict[int, Tuple[int, int]] = dict(state.amps)
    flip = op.flip
    for cfg, (a, b) in state.amps.items():
        m = op.phase_exponent_at(cfg)
        try:
            ra, rb = _GAUSS[m]
        except KeyError:
            raise NotGaussianPhase(
                f"operator phase omega**{m} cannot scale a Gaussian amplitude"
            )
        if sign < 0:
            ra, rb = -ra, -rb
        na = a * ra - b * rb
        nb = a * rb + b * ra
        tgt = cfg ^ flip
        oa, ob = out.get(tgt, (0, 0))
        out[tgt] = (oa + na, ob + nb)
    out = {cfg: ab for cfg, ab in out.items() if ab != (0, 0)}
    _check_state_cap(len(out))
    return SparseState(state.lattice, out, state.scale_k + 1)


def expectation(op, state: SparseState) -> Tuple[Fraction, Fraction]:
    """<state|op|state> / <state|state> as exact (real, imag) rationals."""
    val = state.inner(apply(op, state))
    nrm = state.norm_sq()
    num_a, num_b = val.as_fraction_pair()
    return num_a / nrm, num_b / nrm


# ---------------------------------------------------------------------------
# Ground states
# ---------------------------------------------------------------------------

SECTORS = ("1", "H", "V", "HV")


def sector_seed(lattice: Lattice, sector: str) -> int:
    if sector == "1":
        return 0
    h = straight_cycle(lattice, "h").edge_mask()
    v = straight_cycle(lattice, "v").edge_mask()
    if sector == "H":
        return h
    if sector == "V":
        return v
    if sector == "HV":
        return h ^ v
    raise ValueError(f"unknown sector {sector!r}")


def ground_state(lattice: Lattice, sector: str = "1") -> SparseState:
    """Unnormalized ground state: product of (1 - B_p)/2 on the sector seed."""
    state = SparseState.basis_state(lattice, sector_seed(lattice, sector))
    for p in range(lattice.plaquette_count):
        state = apply_projector(plaquette_op(lattice, p), -1, state)
    assert not state.is_zero()
    return state


def ground_basis(lattice: Lattice) -> Dict[str, SparseState]:
    return {s: ground_state(lattice, s) for s in SECTORS}


def gram_matrix(states: Sequence[SparseState]) -> List[List[ExactScalar]]:
    return [[si.inner(sj) for sj in states] for si in states]


def loop_parity(lattice: Lattice, config: int) -> int:
    """Number of disjoint loops in a vertex-free configuration."""
    deg = [0] * lattice.vertex_count
    edges = [e for e in range(lattice.edge_count) if (config >> e) & 1]
    for e in edges:
        for v in lattice.edge_endpoints[e]:
            deg[int(v)] += 1
    if any(d % 2 for d in deg):
        raise NotVertexFree("configuration has odd degree at a vertex")
    parent = list(range(lattice.vertex_count))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    comp_edges: Dict[int, int] = {}
    for e in edges:
        a, b = (int(v) for v in lattice.edge_endpoints[e])
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    comps = set()
    for e in edges:
        comps.add(find(int(lattice.edge_endpoints[e][0])))
    return len(comps)


def is_vertex_free(lattice: Lattice, config: int) -> bool:
    deg = [0] * lattice.vertex_count
    for e in range(lattice.edge_count):
        if (config >> e) & 1:
            for v in lattice.edge_endpoints[e]:
                deg[int(v)] += 1
    return all(d % 2 == 0 for d in deg)


# ---------------------------------------------------------------------------
# Measurement statistics
# ---------------------------------------------------------------------------


def syndrome_distribution(
    state: SparseState, plaquettes: Sequence[int]
) -> Dict[Tuple[int, ...], Fraction]:
    """Exact flux-pattern distribution over the listed plaquettes.

    Pattern bit 1 means "flux present" (the +1 eigenstate of B_p); bit 0 is
    the ground condition B_p = -1.  Probabilities sum to exactly 1.
    """
    lattice = state.lattice
    total = state.norm_sq()
    out: Dict[Tuple[int, ...], Fraction] = {}

    def recurse(st: SparseState, pattern: Tuple[int, ...]):
        if st.is_zero():
            return
        if len(pattern) == len(plaquettes):
            out[pattern] = st.norm_sq() / total
            return
        op = plaquette_op(lattice, plaquettes[len(pattern)])
        recurse(apply_projector(op, -1, st), pattern + (0,))
        recurse(apply_projector(op, +1, st), pattern + (1,))

    recurse(state, ())
    return out


def vertex_syndrome(state: SparseState) -> Tuple[int, ...]:
    """Deterministic vertex syndrome; requires all support configurations to
    share the same vertex parities (true for monomial images of codestates)."""
    lattice = state.lattice
    first = next(iter(state.amps))
    bits = tuple(
        _vertex_parity(lattice, v, first) for v in range(lattice.vertex_count)
    )
    for other in state.amps:
        for v in range(lattice.vertex_count):
            if _vertex_parity(lattice, v, other) != bits[v]:
                raise ValueError("state has indefinite vertex syndrome")
    return bits


def _vertex_parity(lattice: Lattice, v: int, cfg: int) -> int:
    parity = 0
    for e in lattice.edges_at_vertex(v):
        parity ^= (cfg >> e) & 1
    return parity


# ---------------------------------------------------------------------------
# Logical operators
# ---------------------------------------------------------------------------


def logical_ops(lattice: Lattice) -> Dict[str, StringOperator]:
    """The four logical cycle strings {S+V, S+H, S-V, S-H}.

    Positive ones are concatenations of two-edge canonical open segments along
    straight non-trivial cycles; negative ones carry the sigma^z ring along
    the legs on the left of the traversal.
    """
    H = straight_cycle(lattice, "h")
    V = straight_cycle(lattice, "v")
    sph = path_string_by_segments(lattice, H, LOGICAL_SEGMENT_LEN)
    spv = path_string_by_segments(lattice, V, LOGICAL_SEGMENT_LEN)
    return {
        "S+H": sph,
        "S+V": spv,
        "S-H": negative_chirality(sph),
        "S-V": negative_chirality(spv),
    }


def stabilizer_eigenvalues(
    state: SparseState,
) -> Tuple[Tuple[Optional[int], ...], Tuple[Optional[int], ...]]:
    """Per-operator eigenvalues (+1/-1) where the state is an eigenstate,
    None where it is not: (vertices, plaquettes)."""
    lattice = state.lattice
    vs: List[Optional[int]] = []
    for v in range(lattice.vertex_count):
        vs.append(_eigenvalue(vertex_op(lattice, v), state))
    ps: List[Optional[int]] = []
    for p in range(lattice.plaquette_count):
        ps.append(_eigenvalue(plaquette_op(lattice, p), state))
    return tuple(vs), tuple(ps)


def _eigenvalue(op: MonomialOperator, state: SparseState) -> Optional[int]:
    moved = apply(op, state)
    if moved.scaled_equal(state):
        return 1
    neg = SparseState(
        state.lattice, {c: (-a, -b) for c, (a, b) in moved.amps.items()}, moved.scale_k
    )
    if neg.scaled_equal(state):
        return -1
    return None


def in_codespace(state: SparseState) -> bool:
    vs, ps = stabilizer_eigenvalues(state)
    return all(v == 1 for v in vs) and all(p == -1 for p in ps)
