"""Monte-Carlo error-correction harness.

The decoder is deliberately simple plumbing: greedy minimum-distance pairing
of charge excitations with canonical string operators and of flux excitations
with sigma^z chains along dual paths.  Everything else (syndrome extraction,
state collapse, logical readout) is exact.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .exceptions import InvalidProbability, StateTooLarge, UnpairableSyndrome
from .lattice import Lattice, Path, path_from_edges
from .ops import MonomialOperator, plaquette_op
from .scalar import ExactScalar
from .state import (
    SparseState,
    apply,
    apply_projector,
    expectation,
    ground_state,
    logical_ops,
    vertex_syndrome,
)
from .strings import StringOperator, build_string, path_string_by_segments

# Direct canonical builds are used for corrections up to this length; longer
# corrections fall back to concatenated two-edge segments.
_DIRECT_BUILD_MAX = 7


@dataclass(frozen=True)
class ErrorEvent:
    """Which edges suffered X and/or Z; Y is X and Z on the same edge."""

    x_mask: int
    z_mask: int

    def operator(self) -> MonomialOperator:
        x_edges = [k for k in range(self.x_mask.bit_length()) if (self.x_mask >> k) & 1]
        z_edges = [k for k in range(self.z_mask.bit_length()) if (self.z_mask >> k) & 1]
        return MonomialOperator.sigma_z(z_edges) * MonomialOperator.sigma_x(x_edges)

    @property
    def trivial(self) -> bool:
        return self.x_mask == 0 and self.z_mask == 0


@dataclass(frozen=True)
class Syndrome:
    vertex_bits: Tuple[int, ...]  # 1 where Q_v = -1
    plaquette_bits: Tuple[int, ...]  # 1 where B_p = +1

    @property
    def trivial(self) -> bool:
        return not any(self.vertex_bits) and not any(self.plaquette_bits)

    def excited_vertices(self) -> Tuple[int, ...]:
        return tuple(v for v, b in enumerate(self.vertex_bits) if b)

    def excited_plaquettes(self) -> Tuple[int, ...]:
        return tuple(p for p, b in enumerate(self.plaquette_bits) if b)


@dataclass
class TrialResult:
    error: ErrorEvent
    syndrome: Syndrome
    returned_to_codespace: bool
    logical_class: Tuple[str, str, str, str]
    failed: bool
    aborted: bool = False


def sample_errors(lattice: Lattice, p_x: float, p_z: float, rng: random.Random) -> ErrorEvent:
    """Independent per-edge X and Z flips, deterministic under the rng state."""
    for p in (p_x, p_z):
        if not 0 <= p <= 1:
            raise InvalidProbability(f"probability {p} outside [0, 1]")
    x_mask = 0
    z_mask = 0
    for e in range(lattice.edge_count):
        if rng.random() < p_x:
            x_mask |= 1 << e
    for e in range(lattice.edge_count):
        if rng.random() < p_z:
            z_mask |= 1 << e
    return ErrorEvent(x_mask, z_mask)


def extract_syndrome(
    state: SparseState, rng: random.Random
) -> Tuple[Syndrome, SparseState]:
    """Measure all stabilizers: vertex outcomes are deterministic, plaquette
    outcomes are sampled from the exact conditional probabilities and the
    state is collapsed accordingly."""
    lattice = state.lattice
    vbits = vertex_syndrome(state)
    pbits: List[int] = []
    for p in range(lattice.plaquette_count):
        op = plaquette_op(lattice, p)
        norm = state.norm_sq()
        plus = apply_projector(op, +1, state)
        prob_plus = plus.norm_sq() / norm
        if prob_plus == 1:
            outcome = 1
        elif prob_plus == 0:
            outcome = 0
        else:
            outcome = 1 if rng.random() < float(prob_plus) else 0
        if outcome:
            state = plus
        else:
            state = apply_projector(op, -1, state)
        pbits.append(outcome)
    return Syndrome(vbits, tuple(pbits)), state


# ---------------------------------------------------------------------------
# Decoder
# ---------------------------------------------------------------------------


def _vertex_bfs(lattice: Lattice, src: int) -> Tuple[List[int], List[Tuple[int, int]]]:
    """Distances and (parent vertex, via edge) from src over the vertex graph."""
    dist = [-1] * lattice.vertex_count
    prev: List[Tuple[int, int]] = [(-1, -1)] * lattice.vertex_count
    dist[src] = 0
    frontier = [src]
    while frontier:
        nxt = []
        for v in frontier:
            for e in lattice.edges_at_vertex(v):
                w = lattice.other_endpoint(e, v)
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    prev[w] = (v, e)
                    nxt.append(w)
        frontier = sorted(nxt)
    return dist, prev


def _plaquette_bfs(lattice: Lattice, src: int) -> Tuple[List[int], List[Tuple[int, int]]]:
    dist = [-1] * lattice.plaquette_count
    prev: List[Tuple[int, int]] = [(-1, -1)] * lattice.plaquette_count
    dist[src] = 0
    frontier = [src]
    while frontier:
        nxt = []
        for p in frontier:
            for e in sorted(int(x) for x in _plaquette_boundary(lattice, p)):
                q = _dual_neighbor(lattice, p, e)
                if dist[q] < 0:
                    dist[q] = dist[p] + 1
                    prev[q] = (p, e)
                    nxt.append(q)
        frontier = sorted(nxt)
    return dist, prev


def _plaquette_boundary(lattice: Lattice, p: int):
    return lattice.interior_edges(p)


def _dual_neighbor(lattice: Lattice, p: int, e: int) -> int:
    a, b = (int(x) for x in lattice.edge_side_plaquettes[e])
    return b if p == a else a


def _greedy_pairs(
    points: Sequence[int], dist_fn
) -> List[Tuple[int, int]]:
    if len(points) % 2:
        raise UnpairableSyndrome("odd excitation count cannot be paired")
    remaining = list(points)
    pairs: List[Tuple[int, int]] = []
    while remaining:
        candidates = [
            (dist_fn(a, b), a, b)
            for i, a in enumerate(remaining)
            for b in remaining[i + 1 :]
        ]
        _, a, b = min(candidates)
        pairs.append((a, b))
        remaining.remove(a)
        remaining.remove(b)
    return pairs


def decode(lattice: Lattice, syndrome: Syndrome) -> MonomialOperator:
    """Correction operator: canonical strings pairing charges along shortest
    vertex paths, sigma^z chains pairing fluxes along shortest dual paths."""
    correction = MonomialOperator.identity()

    verts = syndrome.excited_vertices()
    if verts:
        bfs = {v: _vertex_bfs(lattice, v) for v in verts}
        pairs = _greedy_pairs(verts, lambda a, b: bfs[a][0][b])
        for a, b in pairs:
            _, prev = bfs[a]
            edges = []
            cur = b
            while cur != a:
                cur, e = prev[cur]
                edges.append(e)
            path = path_from_edges(lattice, list(reversed(edges)), start_vertex=a)
            if len(path.edges) <= _DIRECT_BUILD_MAX:
                s = build_string(lattice, path, canonical=True, verify=False)
            else:
                s = path_string_by_segments(lattice, path, 2)
            correction = s.op * correction

    plqs = syndrome.excited_plaquettes()
    if plqs:
        bfs = {p: _plaquette_bfs(lattice, p) for p in plqs}
        pairs = _greedy_pairs(plqs, lambda a, b: bfs[a][0][b])
        for a, b in pairs:
            _, prev = bfs[a]
            crossed = []
            cur = b
            while cur != a:
                cur, e = prev[cur]
                crossed.append(e)
            correction = MonomialOperator.sigma_z(crossed) * correction

    return correction


# ---------------------------------------------------------------------------
# Monte-Carlo harness
# ---------------------------------------------------------------------------


def _sign_label(x: Tuple[Fraction, Fraction]) -> str:
    re, im = x
    if re == 0 and im == 0:
        return "0"
    if im == 0:
        return "+" if re > 0 else "-"
    return f"{re}+{im}j"


def reference_state(lattice: Lattice) -> SparseState:
    """Encoded reference: the sector-1 ground state.

    Sector states are joint eigenstates of the diagonal dual-ring logicals,
    so decoder ambiguities that differ by such a ring act trivially on the
    encoded information (this is what makes every single-edge error at L=2
    harmless despite the weight-2 dual rings there).
    """
    return ground_state(lattice, "1")


LOGICAL_ORDER = ("S+V", "S+H", "S-V", "S-H", "ZrH", "ZrV")


def readout_operators(lattice: Lattice) -> Dict[str, MonomialOperator]:
    """The four cycle logicals plus the two diagonal dual-ring logicals.

    The dual rings (closed sigma^z strings on homologically non-trivial dual
    cycles) are the logical observables that take definite +-1 values on the
    sector reference; the four cycle strings have zero expectation there and
    are recorded alongside.
    """
    from .lattice import dual_path_for_negative_chirality, straight_cycle

    logicals = logical_ops(lattice)
    out: Dict[str, MonomialOperator] = {k: v.op for k, v in logicals.items()}
    H = straight_cycle(lattice, "h")
    V = straight_cycle(lattice, "v")
    out["ZrH"] = MonomialOperator.sigma_z(
        dual_path_for_negative_chirality(lattice, H).crossed_edges
    )
    out["ZrV"] = MonomialOperator.sigma_z(
        dual_path_for_negative_chirality(lattice, V).crossed_edges
    )
    return out


def logical_signature(
    state: SparseState, readout: Dict[str, MonomialOperator]
) -> Tuple[str, ...]:
    return tuple(_sign_label(expectation(readout[name], state)) for name in LOGICAL_ORDER)


def run_trial(
    lattice: Lattice,
    base_state: SparseState,
    readout: Dict[str, MonomialOperator],
    reference_sig: Tuple[str, ...],
    event: ErrorEvent,
    rng: random.Random,
) -> TrialResult:
    state = apply(event.operator(), base_state)
    syndrome, state = extract_syndrome(state, rng)
    correction = decode(lattice, syndrome)
    state = apply(correction, state)
    post, state = extract_syndrome(state, rng)
    returned = post.trivial
    sig = logical_signature(state, readout)
    return TrialResult(
        error=event,
        syndrome=syndrome,
        returned_to_codespace=returned,
        logical_class=sig,
        failed=sig != reference_sig,
    )


def run_montecarlo(
    L: int,
    p_x: float,
    p_z: float,
    trials: int,
    seed: int,
) -> Dict:
    """Seeded Monte-Carlo run; aborted trials are counted, never hidden."""
    lattice = Lattice(L)
    readout = readout_operators(lattice)
    base = reference_state(lattice)
    reference_sig = logical_signature(base, readout)

    class_counts: Dict[Tuple[str, ...], int] = {}
    failures = 0
    returned = 0
    aborted = 0
    for t in range(trials):
        rng = random.Random(f"{seed}:{t}")
        event = sample_errors(lattice, p_x, p_z, rng)
        try:
            result = run_trial(lattice, base, readout, reference_sig, event, rng)
        except StateTooLarge:
            aborted += 1
            continue
        class_counts[result.logical_class] = class_counts.get(result.logical_class, 0) + 1
        failures += result.failed
        returned += result.returned_to_codespace
    completed = trials - aborted
    return {
        "L": L,
        "p_x": p_x,
        "p_z": p_z,
        "trials": trials,
        "seed": seed,
        "completed": completed,
        "aborted": aborted,
        "codespace_return_rate": (returned / completed) if completed else None,
        "logical_failure_rate": (failures / completed) if completed else None,
        "reference_signature": list(reference_sig),
        "class_counts": {" ".join(k): v for k, v in sorted(class_counts.items())},
    }
