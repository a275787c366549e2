import random, sys
sys.path.insert(0, "src")
from semionlab.lattice import Lattice, straight_cycle
from semionlab.qec import ErrorEvent, logical_signature, readout_operators, reference_state, run_trial

lat = Lattice(2)
readout = readout_operators(lat)
base = reference_state(lat)
ref = logical_signature(base, readout)
H = straight_cycle(lat, "h")
n = len(H.edges)
for half_name, half in (("first", H.edges[: n // 2]), ("second", H.edges[n // 2 :])):
    ev = ErrorEvent(sum(1 << e for e in half), 0)
    res = run_trial(lat, base, readout, ref, ev, random.Random("adv"))
    print(half_name, half, "failed:", res.failed, res.logical_class, "returned:", res.returned_to_codespace)

V = straight_cycle(lat, "v")
for half_name, half in (("vfirst", V.edges[: n // 2]), ("vsecond", V.edges[n // 2 :])):
    ev = ErrorEvent(sum(1 << e for e in half), 0)
    res = run_trial(lat, base, readout, ref, ev, random.Random("adv"))
    print(half_name, half, "failed:", res.failed, res.logical_class)
