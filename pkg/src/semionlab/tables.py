"""Flux-statistics tables and ground-state dumps."""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from .lattice import Lattice
from .ops import MonomialOperator
from .state import SparseState, apply, ground_state, syndrome_distribution

# Edge-orientation labels for the single-X flux table.  Our type-0 edges are
# the ones whose flux pattern is dominated by the two side plaquettes (the
# "vertical" orientation with the strong directionality); the other two types
# leave no flux most of the time and are labeled a and c.
ORIENTATION_TO_TYPE = {"a": 1, "b": 0, "c": 2}

# Listed patterns in table order over (b_p, b_q, b_r, b_s).
LISTED_PATTERNS: Tuple[Tuple[int, int, int, int], ...] = (
    (0, 0, 0, 0),
    (1, 1, 0, 0),
    (1, 0, 1, 0),
    (0, 1, 1, 0),
    (1, 0, 0, 1),
    (0, 1, 0, 1),
    (0, 0, 1, 1),
    (1, 1, 1, 1),
)


def flux_probe_plaquettes(lattice: Lattice, e: int) -> List[int]:
    """The four plaquettes (p, q, r, s) around edge e: the end plaquette at
    its first endpoint, the two side plaquettes, the end plaquette at its
    second endpoint."""
    side = [int(x) for x in lattice.edge_side_plaquettes[e]]
    end = [int(x) for x in lattice.edge_end_plaquettes[e]]
    return [end[0], side[0], side[1], end[1]]


def single_x_flux_distribution(
    lattice: Lattice,
    orientation: str,
    ground: SparseState = None,
) -> Dict[Tuple[int, int, int, int], Fraction]:
    """Exact flux distribution over (p,q,r,s) after one sigma^x on a
    representative edge of the given orientation, on the sector-1 ground
    state."""
    t = ORIENTATION_TO_TYPE[orientation]
    e = lattice.edge_id(1, 1, t)
    if ground is None:
        ground = ground_state(lattice, "1")
    state = apply(MonomialOperator.sigma_x([e]), ground)
    plqs = flux_probe_plaquettes(lattice, e)
    return syndrome_distribution(state, plqs)


def table1(L: int, orientations: Sequence[str] = ("a", "b", "c")) -> Dict[str, List[Tuple[Tuple[int, ...], Fraction]]]:
    """Rows of the single-X flux table, exact fractions, per orientation."""
    lattice = Lattice(L)
    ground = ground_state(lattice, "1")
    out: Dict[str, List[Tuple[Tuple[int, ...], Fraction]]] = {}
    for o in orientations:
        dist = single_x_flux_distribution(lattice, o, ground)
        out[o] = [(pat, dist.get(pat, Fraction(0))) for pat in LISTED_PATTERNS]
    return out


def groundstate_dump(L: int, sector: str) -> List[Tuple[str, int, int, int]]:
    """(config-hex, a, b, k) lines for every amplitude of a sector state."""
    lattice = Lattice(L)
    state = ground_state(lattice, sector)
    rows = []
    for cfg in sorted(state.amps):
        a, b = state.amps[cfg]
        amp = state.amplitude(cfg)
        rows.append((hex(cfg), amp.a, amp.b, amp.k))
    return rows
