import sys, time
sys.path.insert(0, "src")
from semionlab.lattice import Lattice
from semionlab.families import crossing_family
from semionlab.strings import crossing_ratio, negative_chirality, path_string_by_segments

lat = Lattice(6)
t0 = time.time()
for n in (0, 1, 2, 3):
    fam = crossing_family(lat, n, 4, seed=1)
    for k, (p, q) in enumerate(fam):
        sp = path_string_by_segments(lat, p, 1)
        sq = path_string_by_segments(lat, q, 1)
        r = crossing_ratio(sp, sq)
        expect = 4 * (n % 2)
        status = "OK" if (r is not None and r.m == expect) else f"BAD {r}"
        print(f"n={n} pair {k}: ratio={r} {status} ({time.time()-t0:.1f}s)")

# mixed relations on a crossing pair
p, q = crossing_family(lat, 1, 1, seed=2)[0]
sp = path_string_by_segments(lat, p, 1)
sq = path_string_by_segments(lat, q, 1)
smp = negative_chirality(sp)
smq = negative_chirality(sq)
print("S+P vs S-Q:", crossing_ratio(sp, smq))
print("S-P vs S-Q:", crossing_ratio(smp, smq))
print("S-P vs S+Q:", crossing_ratio(smp, sq))
print(f"total {time.time()-t0:.1f}s")
