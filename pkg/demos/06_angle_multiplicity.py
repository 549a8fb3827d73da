"""
How rational directions land on finite angles
=============================================

Every coprime direction maps to one of the N+1 finite angles.  Short
vectors spread almost evenly, so a first-come selection of distinct
finite angles stays short.
"""
import numpy as np

from drtghost.mojette import enumerate_angles, map_angle_to_frt, mapping_multiplicity

N = 23
for coverage in ("octant1", "quadrant", "halfplane"):
    hist = mapping_multiplicity(N, coverage, 12)
    print(f"{coverage:9s} total {hist.sum():4d}  min {hist.min():2d}  max {hist.max():2d}  "
          f"unused {int((hist == 0).sum())}")

# how far down the list before every finite angle has appeared
for N in (23, 101, 257):
    seen = set()
    for i, a in enumerate(enumerate_angles("halfplane")):
        seen.add(map_angle_to_frt(a, N))
        if len(seen) == N + 1:
            print(f"N={N}: all {N + 1} angles after {i + 1} directions, last {a}")
            break

print(np.array2string(mapping_multiplicity(23, "quadrant", 12), max_line_width=100))
