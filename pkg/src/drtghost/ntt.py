"""Number theoretic transforms over a :class:`~drtghost.modring.ModRing`.

All transforms act on the last axis of an integer array, so a stack of rows
is transformed in one call.  The forward transform is unnormalised,

    X(u) = sum_j x(j) * w**(j*u)  (mod M),

and the inverse carries the ``1/L`` factor.

Three algorithms are provided:

* :func:`ntt_direct`, the O(L^2) definition, used as the oracle;
* :func:`ntt_pow2`, iterative radix-2 decimation in time;
* :func:`ntt_rader`, Rader's prime-length algorithm, which reorders the input
  by powers of a primitive root of ``p`` so the non-DC part of the transform
  becomes a cyclic convolution of length ``p-1``.
"""
from __future__ import annotations

from functools import lru_cache

import numpy as np

from .modring import ModRing, find_primitive_root, has_order, is_prime, mod_inverse

ALGORITHMS = ("auto", "direct", "pow2", "rader")


def _residues(v, M):
    return np.asarray(v, dtype=np.int64) % M


def is_power_of_two(n: int) -> bool:
    return n > 0 and n & (n - 1) == 0


def _check_root(root, L, M):
    if not has_order(root, L, M):
        raise ValueError(f"root {root} does not have order {L} modulo {M}")


def ntt_direct(v, ring: ModRing, root: int | None = None) -> np.ndarray:
    """Transform by direct evaluation of the defining sum."""
    M = ring.modulus
    x = _residues(v, M)
    L = x.shape[-1]
    if root is None:
        root = ring.root_of_unity(L)
    root %= M
    _check_root(root, L, M)
    powers = _power_table(root, L, M)
    exps = (np.arange(L)[:, None] * np.arange(L)[None, :]) % L
    W = powers[exps]
    out = np.zeros_like(x)
    for j in range(L):
        out = (out + x[..., j:j + 1] * W[j]) % M
    return out


@lru_cache(maxsize=256)
def _power_table(root, L, M):
    p = np.empty(L, dtype=np.int64)
    acc = 1
    for i in range(L):
        p[i] = acc
        acc = acc * root % M
    p.setflags(write=False)
    return p


@lru_cache(maxsize=64)
def _bit_reversal(L):
    bits = L.bit_length() - 1
    idx = np.arange(L)
    rev = np.zeros(L, dtype=np.int64)
    for b in range(bits):
        rev |= ((idx >> b) & 1) << (bits - 1 - b)
    return rev


def ntt_pow2(v, ring: ModRing, root: int | None = None) -> np.ndarray:
    """Radix-2 transform; the length must be a power of two."""
    M = ring.modulus
    x = _residues(v, M)
    L = x.shape[-1]
    if not is_power_of_two(L):
        raise ValueError(f"length {L} is not a power of two")
    if root is None:
        root = ring.root_of_unity(L)
    root %= M
    _check_root(root, L, M)
    if L == 1:
        return x.copy()
    batch = x.shape[:-1]
    a = x[..., _bit_reversal(L)]
    h = 1
    while h < L:
        tw = _power_table(pow(root, L // (2 * h), M), h, M)
        a = a.reshape(*batch, L // (2 * h), 2, h)
        even = a[..., 0, :]
        odd = a[..., 1, :] * tw % M
        a = np.stack(((even + odd) % M, (even - odd) % M), axis=-2)
        h *= 2
    return a.reshape(*batch, L)


def rader_convolution_length(p: int) -> tuple[int, bool]:
    """Length of Rader's internal cyclic convolution for prime ``p``.

    Returns ``(length, padded)``.  When ``p-1`` is a power of two it is used
    as is; otherwise the convolution is zero-padded to the smallest power of
    two strictly greater than ``2p-4``.
    """
    if is_power_of_two(p - 1):
        return p - 1, False
    n = 1
    while n <= 2 * p - 4:
        n *= 2
    return n, True


def rader_two_adicity(p: int) -> int:
    """Exponent ``c`` such that a ring with ``2**c | M-1`` runs Rader dyadically."""
    n, _ = rader_convolution_length(p)
    return n.bit_length() - 1


def rader_permutations(p: int, a: int | None = None) -> tuple[np.ndarray, np.ndarray]:
    """Input and output index orders of Rader's algorithm.

    ``input_order[j] = a**(-j) mod p`` and ``output_order[j] = a**j mod p`` for
    ``j = 0..p-2``, where ``a`` is a primitive root of ``p``.
    """
    if a is None:
        a = find_primitive_root(p)
    a_inv = mod_inverse(a, p) if p > 2 else 1
    inp = np.array([pow(a_inv, j, p) for j in range(p - 1)], dtype=np.int64)
    out = np.array([pow(a, j, p) for j in range(p - 1)], dtype=np.int64)
    return inp, out


def rader_circulant_row(p: int, root: int, modulus: int, a: int | None = None) -> np.ndarray:
    """Unique row ``W_j = root**(a**j mod p)`` of the reordered circulant."""
    _, out = rader_permutations(p, a)
    return np.array([pow(root, int(e), modulus) for e in out], dtype=np.int64)


@lru_cache(maxsize=128)
def _rader_plan(p, root, M, a_M, backend):
    """Cached permutations and the transformed kernel for one (p, root, ring)."""
    inp, out = rader_permutations(p)
    W = rader_circulant_row(p, root, M)
    L, padded = rader_convolution_length(p)
    dyadic = backend == "dyadic" or (backend == "auto" and (M - 1) % L == 0)
    if backend == "dyadic" and (M - 1) % L:
        raise ValueError(f"modulus {M} has no root of order {L} for the dyadic backend")
    plan = {"inp": inp, "out": out, "W": W, "dyadic": dyadic}
    if dyadic:
        ring = ModRing(M, a_M, pow(a_M, (M - 1) // L, M), L)
        w = ring.alpha
        if padded:
            reps = -(-L // (p - 1))
            W = np.tile(W, reps)[:L]
        plan.update(L=L, padded=padded, w=w, w_inv=mod_inverse(w, M),
                    L_inv=mod_inverse(L, M), ring=ring,
                    W_hat=ntt_pow2(W, ring, w))
    return plan


def _cyclic_convolve_direct(x, W, M):
    """Exact cyclic convolution of each row of ``x`` with the vector ``W``."""
    L = W.shape[-1]
    out = np.zeros_like(x)
    for k in range(L):
        out = (out + x[..., k:k + 1] * np.roll(W, k)) % M
    return out


def ntt_rader(v, ring: ModRing, root: int | None = None, backend: str = "auto") -> np.ndarray:
    """Prime-length transform by Rader's reordering.

    ``backend`` selects how the length ``p-1`` cyclic convolution is done:
    ``"dyadic"`` (power-of-two NTT in the same ring, zero padded when ``p-1``
    is not a power of two), ``"direct"`` (exact O(p^2) summation) or
    ``"auto"`` (dyadic when the ring allows it).
    """
    M = ring.modulus
    x = _residues(v, M)
    p = x.shape[-1]
    if not is_prime(p):
        raise ValueError(f"Rader's algorithm needs a prime length, got {p}")
    if backend not in ("auto", "dyadic", "direct"):
        raise ValueError(f"unknown backend {backend!r}")
    if root is None:
        root = ring.root_of_unity(p)
    root %= M
    _check_root(root, p, M)
    plan = _rader_plan(p, root, M, ring.primitive_root, backend)

    xs = x[..., plan["inp"]]
    if plan["dyadic"]:
        L = plan["L"]
        if plan["padded"]:
            pad = np.zeros(x.shape[:-1] + (L - p + 1,), dtype=np.int64)
            xs = np.concatenate((xs[..., :1], pad, xs[..., 1:]), axis=-1)
        pr = plan["ring"]
        prod = ntt_pow2(xs, pr, plan["w"]) * plan["W_hat"] % M
        conv = ntt_pow2(prod, pr, plan["w_inv"]) * plan["L_inv"] % M
        conv = conv[..., :p - 1]
    else:
        conv = _cyclic_convolve_direct(xs, plan["W"], M)

    result = np.empty_like(x)
    result[..., plan["out"]] = (conv + x[..., :1]) % M
    result[..., 0] = x.sum(axis=-1) % M
    return result


def _pick(L, algorithm):
    if algorithm == "auto":
        if is_power_of_two(L):
            return "pow2"
        if is_prime(L) and L > 2:
            return "rader"
        return "direct"
    if algorithm not in ALGORITHMS:
        raise ValueError(f"unknown algorithm {algorithm!r}")
    return algorithm


def ntt(v, ring: ModRing, algorithm: str = "auto", root: int | None = None) -> np.ndarray:
    """Forward transform along the last axis."""
    x = np.asarray(v)
    L = x.shape[-1]
    if root is None:
        root = ring.root_of_unity(L)
    algo = _pick(L, algorithm)
    if algo == "pow2":
        return ntt_pow2(x, ring, root)
    if algo == "rader":
        return ntt_rader(x, ring, root)
    return ntt_direct(x, ring, root)


def intt(v, ring: ModRing, algorithm: str = "auto", root: int | None = None) -> np.ndarray:
    """Inverse transform along the last axis, normalised by ``1/L``.

    ``root`` is the forward root; its inverse drives the transform.
    """
    M = ring.modulus
    x = np.asarray(v)
    L = x.shape[-1]
    if root is None:
        root = ring.root_of_unity(L)
    y = ntt(x, ring, algorithm, mod_inverse(root, M))
    return y * mod_inverse(L, M) % M


def cyclic_convolve(x, y, ring: ModRing, algorithm: str = "auto") -> np.ndarray:
    """Cyclic convolution via the transform: ``intt(ntt(x) * ntt(y))``."""
    M = ring.modulus
    return intt(ntt(x, ring, algorithm) * ntt(y, ring, algorithm) % M, ring, algorithm)
