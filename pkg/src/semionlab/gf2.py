"""GF(2) linear algebra on int bitmasks."""

from __future__ import annotations

from typing import Iterable, List, Optional, Sequence, Tuple


def gf2_rank(rows: Iterable[int]) -> int:
    """Rank of a set of bitmask row vectors over GF(2)."""
    basis: List[int] = []
    for row in rows:
        row = _reduce(row, basis)
        if row:
            basis.append(row)
    return len(basis)


def _reduce(vec: int, basis: Iterable[int]) -> int:
    for b in basis:
        vec = min(vec, vec ^ b)
    return vec


def gf2_msb_basis(rows: Sequence[int]) -> List[int]:
    """Echelon basis whose vectors have distinct leading (most significant) bits.

    Reducing by this basis sends every vector to the minimum integer of its
    coset, which makes coset representatives canonical.
    """
    basis: List[int] = []
    for row in rows:
        for b in basis:
            row = min(row, row ^ b)
        if row:
            basis.append(row)
            basis.sort(reverse=True)
    # Back-substitute so each leading bit appears in exactly one vector.
    for i in range(len(basis)):
        for j in range(len(basis)):
            if i != j and basis[j] ^ basis[i] < basis[j]:
                basis[j] ^= basis[i]
    basis.sort(reverse=True)
    return basis


def gf2_canonical_rep(vec: int, msb_basis: Sequence[int]) -> int:
    """Minimum integer in the coset vec + span(basis)."""
    for b in msb_basis:
        vec = min(vec, vec ^ b)
    return vec


def gf2_independent_subset(rows: Sequence[int]) -> List[int]:
    """Indices of a greedy maximal independent subset of rows."""
    basis: List[int] = []
    chosen: List[int] = []
    for idx, row in enumerate(rows):
        red = _reduce(row, basis)
        if red:
            basis.append(red)
            chosen.append(idx)
    return chosen


def gf2_solve_subset(rows: Sequence[int], target: int) -> Optional[List[int]]:
    """Indices of rows XOR-summing to target, or None if unsolvable."""
    basis: List[Tuple[int, int]] = []  # (vector, combination bitmask over rows)
    for idx, row in enumerate(rows):
        combo = 1 << idx
        for bvec, bcombo in basis:
            if row ^ bvec < row:
                row ^= bvec
                combo ^= bcombo
        if row:
            basis.append((row, combo))
    combo = 0
    for bvec, bcombo in basis:
        if target ^ bvec < target:
            target ^= bvec
            combo ^= bcombo
    if target:
        return None
    return [i for i in range(len(rows)) if (combo >> i) & 1]


def gf2_in_span(vec: int, rows: Sequence[int]) -> bool:
    """Whether vec lies in the GF(2) span of rows."""
    return gf2_solve_subset(rows, vec) is not None
