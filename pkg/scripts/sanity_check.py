"""Dev tool: make sure the commutation machinery can detect failures."""

import sys

sys.path.insert(0, "src")

import numpy as np

from semionlab.lattice import Lattice
from semionlab.ops import (
    MonomialOperator,
    commutation_phase,
    is_involution_and_hermitian,
    plaquette_op,
)


def sign_only_plaquette(lat, p):
    """Old-style plaquette: sigma^x ring with only the (-1) sign factor."""
    idx = np.arange(1 << 12, dtype=np.uint32)
    occ = [((idx >> np.uint32(j)) & 1).astype(np.int32) for j in range(12)]
    emp = [1 - o for o in occ]
    exp = np.zeros(1 << 12, dtype=np.int32)
    for jprev, j in ((5, 0), (0, 1), (1, 2), (2, 3), (3, 4), (4, 5)):
        exp += 4 * occ[jprev] * emp[j]
    table = (exp % 8).astype(np.int8)
    return MonomialOperator.flip_phase(lat.local_edges(p), lat.interior_edges(p), table)


def main():
    # sigma^x vs sigma^z on a shared edge anticommute.
    x = MonomialOperator.sigma_x([5])
    z = MonomialOperator.sigma_z([5])
    print("x/z shared edge:", commutation_phase(x, z))
    print("x/z disjoint:", commutation_phase(MonomialOperator.sigma_x([1]), z))

    lat = Lattice(4)
    # beta-less plaquettes must NOT all commute (zero-flux-only model).
    bad = 0
    for p in range(lat.plaquette_count):
        for q in range(p + 1, lat.plaquette_count):
            A, B = sign_only_plaquette(lat, p), sign_only_plaquette(lat, q)
            if set(A.support) & set(B.support):
                c = commutation_phase(A, B)
                if c is None or c.m != 0:
                    bad += 1
    print("beta-less noncommuting pairs:", bad)
    herm = sum(
        not is_involution_and_hermitian(sign_only_plaquette(lat, p))
        for p in range(lat.plaquette_count)
    )
    print("beta-less non-hermitian:", herm)

    # full operators, vacuum phase should be +1, and single hexagon checks
    B0 = plaquette_op(lat, 0)
    print("b_0(vacuum):", B0.phase_at(0))


if __name__ == "__main__":
    main()
