"""
Finite ghosts
=============

A ghost is an image whose projections vanish at a chosen set of angles.
Each missing angle contributes a two-point kernel, +1 at the origin and -1
one row down shifted by m; their cyclic convolution is computed here one
projection at a time in the 1D transform domain and compared with the
straightforward 2D product.
"""
from pathlib import Path
import sys

import numpy as np

from drtghost.formats import write_residue_pgm
from drtghost.frt import frt_forward
from drtghost.ghost import (GhostSpec, build_ghost_1d, build_ghost_2d_oracle, operator_table,
                            signed, support_rows)
from drtghost.modring import select_modulus

out = Path(sys.argv[1] if len(sys.argv) > 1 else "demo_output")
out.mkdir(exist_ok=True)

# the two-angle ghost on a 5x5 grid is a small parallelogram
spec = GhostSpec(5, (1, 2), select_modulus(5, 256))
print(signed(build_ghost_1d(spec), spec.ring.modulus))

# four missing angles on N=13 with modulus 53
spec = GhostSpec(13, (1, 2, 3, 4), select_modulus(13, 2))
ghost = build_ghost_1d(spec)
print("M =", spec.ring.modulus, " rows used:", support_rows(ghost))
print("same as 2D product:", np.array_equal(ghost, build_ghost_2d_oracle(spec)))
rows = frt_forward(ghost, spec.ring).rows
print("projections zero at missing angles:", not rows[list(spec.missing)].any())
print("non-zero elsewhere:", rows[list(spec.known)].any(axis=1).sum(), "of", len(spec.known))
write_residue_pgm(out / "ghost_13.pgm", ghost, spec.ring.modulus, "ghost")

# 80 missing angles in N=101 give an 81-row ghost
spec = GhostSpec(101, tuple(range(1, 81)), select_modulus(101, 256))
ghost = build_ghost_1d(spec)
print("N=101, 80 missing: ghost rows", len(support_rows(ghost)))
write_residue_pgm(out / "ghost_101.pgm", ghost, spec.ring.modulus, "ghost")

# eigenvalues of every one-row kernel shift d: 1 - alpha^(d u)
ring = select_modulus(479, 256)
write_residue_pgm(out / "operators_479.pgm", operator_table(ring), ring.modulus,
                  "ghost operator table")
print("wrote images to", out)
