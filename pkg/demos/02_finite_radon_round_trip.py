"""
The finite Radon transform and its slices
=========================================

Projects an image along the N+1 wrapped lines ``y = m x + t (mod N)``,
places the 1D transform of every projection on its line through the 2D
transform grid, and inverts exactly.
"""
import numpy as np

from drtghost.frt import (cbp_partial, circulant, frt_forward, frt_inverse, slice_coordinates)
from drtghost.modring import mod_inverse, select_modulus

N = 7
ring = select_modulus(N, 256)
img = np.random.default_rng(1).integers(0, 256, (N, N))
space = frt_forward(img, ring)
print("projection rows:", space.rows.shape, " every row sums to", space.total())

# The N+1 slices meet only at the DC cell
counts = np.zeros((N, N), dtype=int)
for m in range(N + 1):
    u, v = slice_coordinates(m, N)
    counts[u[1:], v[1:]] += 1
print("non-DC coverage:", np.unique(counts[counts > 0]))

print("exact inverse:", np.array_equal(frt_inverse(space), img))

# Dropping one projection leaves a ghost that is the negated circulant of
# the missing row, up to a constant and the factor 1/N
m = 3
M = ring.modulus
partial = cbp_partial(space.with_missing([m]))
ghost = (partial - img) % M
check = (N * ghost + circulant(space.rows[m], m, N)) % M
print(f"ghost for missing m={m} is a circulant:", (check == check[0, 0]).all(),
      " constant =", check[0, 0], "= S/N mod M:", space.total() * mod_inverse(N, M) % M)
