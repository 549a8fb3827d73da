"""Finite ghosts: images whose projections vanish at a chosen set of angles.

A ghost for missing projections ``m_1..m_n`` is the 2D cyclic convolution of
a delta at the origin with one two-point kernel per missing angle.  The
kernel for slope ``m`` has ``+1`` at ``(0, 0)`` and ``-1`` at ``(1, m)``, so it
sums to zero along its own lines; the perpendicular kernel has its ``-1`` at
``(0, 1)``.

Because every slice of a kernel is the transform of a two-entry vector, the
convolution can be done one projection at a time: the slice of known
projection ``m_j`` is the product over missing ``m_G`` of

    Lambda_d(u) = 1 - alpha**(d*u),   d = kernel_translate(m_G, m_j).
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .frt import frt_forward, intt2, ntt2, slices_to_image
from .modring import ModRing


@dataclass(frozen=True)
class GhostSpec:
    """Missing projections of an ``N x N`` space.  Angle ``N`` is perpendicular."""

    N: int
    missing: tuple[int, ...]
    ring: ModRing

    def __post_init__(self):
        missing = tuple(sorted(set(int(m) for m in self.missing)))
        if not missing:
            raise ValueError("a ghost needs at least one missing angle")
        if missing[0] < 0 or missing[-1] > self.N:
            raise ValueError(f"angles must lie in 0..{self.N}")
        if self.ring.length != self.N:
            raise ValueError(f"ring built for N={self.ring.length}, not {self.N}")
        object.__setattr__(self, "missing", missing)

    @property
    def known(self) -> tuple[int, ...]:
        gone = set(self.missing)
        return tuple(m for m in range(self.N + 1) if m not in gone)

    @property
    def count(self) -> int:
        return len(self.missing)

    @property
    def finite_count(self) -> int:
        return sum(1 for m in self.missing if m != self.N)

    def known_mask(self) -> np.ndarray:
        mask = np.ones(self.N + 1, dtype=bool)
        mask[list(self.missing)] = False
        return mask


def kernel_translate(m_ghost: int, m_proj: int, N: int) -> int:
    """Translate of the ``-1`` term of kernel ``m_ghost`` in projection ``m_proj``.

    Angle ``N`` denotes the perpendicular projection (or kernel).
    """
    if m_ghost == N:
        return 0 if m_proj == N else 1
    if m_proj == N:
        return 1
    return (m_ghost - m_proj) % N


def operator_table(ring: ModRing) -> np.ndarray:
    """``table[d, u] = 1 - alpha**(d*u) mod M`` for ``d, u`` in ``0..N-1``."""
    N, M = ring.length, ring.modulus
    powers = np.empty(N, dtype=np.int64)
    acc = 1
    for i in range(N):
        powers[i] = acc
        acc = acc * ring.alpha % M
    du = (np.arange(N)[:, None] * np.arange(N)[None, :]) % N
    return (1 - powers[du]) % M


def build_operator_table(spec: GhostSpec) -> np.ndarray:
    return operator_table(spec.ring)


def ghost_slices(spec: GhostSpec, table: np.ndarray | None = None) -> np.ndarray:
    """Slices of the ghost for every projection (missing rows are zero)."""
    N, M = spec.N, spec.ring.modulus
    if table is None:
        table = operator_table(spec.ring)
    slices = np.zeros((N + 1, N), dtype=np.int64)
    for j in spec.known:
        s = np.ones(N, dtype=np.int64)  # slice of the delta seed
        for g in spec.missing:
            s = s * table[kernel_translate(g, j, N)] % M
        slices[j] = s
    return slices


def build_ghost_1d(spec: GhostSpec, table: np.ndarray | None = None) -> np.ndarray:
    """Ghost image via per-projection 1D products (projection convolution)."""
    return slices_to_image(ghost_slices(spec, table), spec.known_mask(), spec.ring)


def kernel_image(m: int, N: int, modulus: int) -> np.ndarray:
    """The two-point kernel for slope ``m`` (``m == N``: perpendicular)."""
    k = np.zeros((N, N), dtype=np.int64)
    k[0, 0] = 1
    if m == N:
        k[0, 1 % N] = modulus - 1
    else:
        k[1 % N, m] = modulus - 1
    return k


def build_ghost_2d_oracle(spec: GhostSpec) -> np.ndarray:
    """Ghost image by multiplying full 2D transforms of the delta and kernels."""
    N, ring = spec.N, spec.ring
    M = ring.modulus
    delta = np.zeros((N, N), dtype=np.int64)
    delta[0, 0] = 1
    F = ntt2(delta, ring)
    for m in spec.missing:
        F = F * ntt2(kernel_image(m, N, M), ring) % M
    return intt2(F, ring)


def ghost_zero_check(ghost, spec: GhostSpec) -> bool:
    """True when the ghost projects to zero at every missing angle."""
    rows = frt_forward(ghost, spec.ring).rows
    return bool((rows[list(spec.missing)] == 0).all())


def support_rows(img) -> np.ndarray:
    """Indices of array rows holding a nonzero entry."""
    return np.flatnonzero(np.asarray(img).any(axis=1))


def signed(img, modulus: int) -> np.ndarray:
    """Map residues to the symmetric range ``(-M/2, M/2]``."""
    img = np.asarray(img, dtype=np.int64) % modulus
    return np.where(img > modulus // 2, img - modulus, img)
