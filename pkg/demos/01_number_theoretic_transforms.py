"""
Exact transforms over a prime field
===================================

Picks a modulus for a prime length, checks the transform against the
defining sum, and shows Rader's trick turning a prime-length transform
into a cyclic convolution.
"""
import numpy as np

from drtghost.ntt import (cyclic_convolve, intt, ntt, ntt_direct, rader_convolution_length,
                          rader_permutations, rader_two_adicity)
from drtghost.modring import ModRing, select_modulus

# N=101 with 8-bit pixels gives the small modulus 607
ring = select_modulus(101, 256)
print(ring)

# any integer vector survives a forward/inverse round trip unchanged
rng = np.random.default_rng(0)
x = rng.integers(0, 256, 101)
X = ntt(x, ring)
print("round trip exact:", np.array_equal(intt(X, ring), x))
print("Rader == direct sum:", np.array_equal(X, ntt_direct(x, ring)))

# The reordering for p=5 with generator 2.  Rows read the input as
# x(1), x(3), x(4), x(2); columns give X(1), X(2), X(4), X(3).
inp, out = rader_permutations(5, 2)
print("input order ", inp, " output order", out)
print(np.array([[r * c % 5 for c in out] for r in inp]))

# 100 is not a power of two, so the convolution is padded to 256; a modulus
# with 256 | M-1 lets that convolution use the fast power-of-two transform
fast = select_modulus(101, 256, rader_two_adicity(101))
print(fast, "convolution length", rader_convolution_length(101))
print("padded Rader exact:", np.array_equal(ntt(x, fast), ntt_direct(x, fast)))

# and the whole point: convolution with no rounding at all
a, b = rng.integers(0, 8, 16), rng.integers(0, 8, 16)
ring16 = ModRing.from_modulus(7681, 16)     # 7681 = 15 * 512 + 1
ref = [sum(a[j] * b[(i - j) % 16] for j in range(16)) for i in range(16)]
print("cyclic convolution exact:", np.array_equal(cyclic_convolve(a, b, ring16), ref))
