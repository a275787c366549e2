"""Dev tool: find the plaquette label convention satisfying the operator relations."""

import itertools
import sys

sys.path.insert(0, "src")

from semionlab.lattice import Lattice
from semionlab.ops import (
    all_plaquette_ops,
    commutation_phase,
    is_involution_and_hermitian,
    plaquette_op,
    vertex_op,
)


def check_convention(L, rotation, reflect, verbose=False):
    lat = Lattice(L, _rotation=rotation, _reflect=reflect)
    bs = all_plaquette_ops(lat)
    # Involution / Hermiticity per plaquette.
    for p, B in enumerate(bs):
        if not is_involution_and_hermitian(B):
            if verbose:
                print(f"  B_{p} fails B^2=1 / hermiticity")
            return False
    # Pairwise commutation (only overlapping supports matter).
    for p, q in itertools.combinations(range(len(bs)), 2):
        if set(bs[p].support) & set(bs[q].support):
            c = commutation_phase(bs[p], bs[q])
            if c is None or c.m != 0:
                if verbose:
                    print(f"  [B_{p}, B_{q}] != 0: phase {c}")
                return False
    # Vertex ops commute with plaquettes.
    for v in range(lat.vertex_count):
        Q = vertex_op(lat, v)
        for p in range(lat.plaquette_count):
            B = bs[p]
            if set(Q.support) & set(B.support):
                c = commutation_phase(Q, B)
                if c is None or c.m != 0:
                    if verbose:
                        print(f"  [Q_{v}, B_{p}] != 0")
                    return False
    return True


def main():
    winners = []
    for reflect in (False, True):
        for rotation in range(6):
            ok = check_convention(4, rotation, reflect)
            print(f"rotation={rotation} reflect={reflect}: {'PASS' if ok else 'fail'}")
            if ok:
                winners.append((rotation, reflect))
    print("winners:", winners)
    # confirm winners on L=2 as well
    for rotation, reflect in winners:
        ok2 = check_convention(2, rotation, reflect)
        print(f"L=2 confirm rotation={rotation} reflect={reflect}: {ok2}")


if __name__ == "__main__":
    main()
