"""Prime-size discrete Radon transform and its exact inverse.

Images are ``N x N`` integer arrays indexed ``img[x, y]``: ``x`` is the array
row, ``y`` the array column.  Projection ``m`` (``0 <= m < N``) sums along the
wrapped lines ``y = m*x + t (mod N)``; the extra perpendicular projection,
stored at index ``N`` and written ``PERP`` in files, sums each array row::

    R[m, t] = sum_x img[x, (m*x + t) % N]
    R[N, t] = sum_y img[t, y]

The 2D transform is ``F[u, v] = sum img[x, y] * alpha**(u*x + v*y)``.  The 1D
transform of projection ``m`` lands on the cells ``k*(-m, 1)`` of ``F`` and
that of the perpendicular projection on ``k*(1, 0)``; together the N+1 slices
cover every cell once apart from the shared DC term.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .modring import ModRing, is_prime, mod_inverse
from .ntt import intt, ntt


def perp(N: int) -> int:
    """Index of the perpendicular projection in an ``(N+1) x N`` space."""
    return N


def angle_name(m: int, N: int) -> str:
    return "PERP" if m == N else str(m)


def embed(image, N: int) -> np.ndarray:
    """Place a ``Q x P`` image in the top-left corner of a zero ``N x N`` grid."""
    image = np.asarray(image, dtype=np.int64)
    Q, P = image.shape
    if Q > N or P > N:
        raise ValueError(f"{Q}x{P} image does not fit in {N}x{N}")
    grid = np.zeros((N, N), dtype=np.int64)
    grid[:Q, :P] = image
    return grid


@dataclass
class FrtSpace:
    """The N+1 projections of an ``N x N`` image, with a known/missing mask."""

    rows: np.ndarray
    ring: ModRing
    known: np.ndarray = field(default=None)

    def __post_init__(self):
        self.rows = np.asarray(self.rows, dtype=np.int64) % self.ring.modulus
        N = self.rows.shape[1]
        if self.rows.shape != (N + 1, N):
            raise ValueError(f"expected an (N+1) x N array, got {self.rows.shape}")
        if self.known is None:
            self.known = np.ones(N + 1, dtype=bool)
        self.known = np.asarray(self.known, dtype=bool)
        if self.known.shape != (N + 1,):
            raise ValueError("known mask must have N+1 entries")

    @property
    def N(self) -> int:
        return self.rows.shape[1]

    @property
    def missing(self) -> list[int]:
        return [int(m) for m in np.flatnonzero(~self.known)]

    def total(self) -> int:
        """Image sum, read from the first known projection."""
        known = np.flatnonzero(self.known)
        if known.size == 0:
            raise ValueError("no known projections")
        return int(self.rows[known[0]].sum() % self.ring.modulus)

    def with_missing(self, angles) -> "FrtSpace":
        """Copy with the given projections marked missing and zeroed."""
        known = self.known.copy()
        rows = self.rows.copy()
        for m in angles:
            known[m] = False
            rows[m] = 0
        return FrtSpace(rows, self.ring, known)


def frt_forward(img, ring: ModRing) -> FrtSpace:
    """All N+1 projections of a prime-sized image, reduced modulo the ring."""
    img = np.asarray(img, dtype=np.int64) % ring.modulus
    N = img.shape[0]
    if img.shape != (N, N):
        raise ValueError("image must be square")
    if not is_prime(N):
        raise ValueError(f"image side {N} is not prime")
    x = np.arange(N)
    t = np.arange(N)
    rows = np.empty((N + 1, N), dtype=np.int64)
    for m in range(N):
        cols = (m * x[None, :] + t[:, None]) % N
        rows[m] = img[x[None, :], cols].sum(axis=1)
    rows[N] = img.sum(axis=1)
    return FrtSpace(rows, ring)


def slice_coordinates(m: int, N: int) -> tuple[np.ndarray, np.ndarray]:
    """Grid cells ``(u, v)`` receiving samples ``k = 0..N-1`` of slice ``m``."""
    k = np.arange(N)
    if m == N:
        return k, np.zeros(N, dtype=np.int64)
    return (-m * k) % N, k


def place_slice(grid: np.ndarray, m: int, values) -> np.ndarray:
    """Write the transformed projection ``m`` into the 2D transform grid."""
    N = grid.shape[0]
    values = np.asarray(values)
    if values.shape != (N,):
        raise ValueError(f"slice must have length {N}, got {values.shape}")
    u, v = slice_coordinates(m, N)
    grid[u, v] = values
    return grid


def ntt2(img, ring: ModRing) -> np.ndarray:
    """2D transform as a pass of 1D transforms over rows, then columns."""
    return ntt(ntt(img, ring).T, ring).T


def intt2(F, ring: ModRing) -> np.ndarray:
    return intt(intt(F, ring).T, ring).T


def slices_to_image(slices, known, ring: ModRing) -> np.ndarray:
    """Inverse 2D transform of a grid assembled from 1D slices.

    Only slices flagged in ``known`` are placed; the rest of the grid stays
    zero.  The DC cell is written once, from the first known slice.
    """
    slices = np.asarray(slices, dtype=np.int64)
    N = slices.shape[1]
    F = np.zeros((N, N), dtype=np.int64)
    idx = np.flatnonzero(known)
    if idx.size == 0:
        raise ValueError("at least one known slice is required")
    k = np.arange(N)
    for m in idx:
        if m == N:
            F[k[1:], 0] = slices[m, 1:]
        else:
            F[(-m * k[1:]) % N, k[1:]] = slices[m, 1:]
    F[0, 0] = slices[idx[0], 0]
    return intt2(F, ring)


def frt_slices(space: FrtSpace) -> np.ndarray:
    """1D transforms of the known projections; missing rows stay zero."""
    out = np.zeros_like(space.rows)
    idx = np.flatnonzero(space.known)
    out[idx] = ntt(space.rows[idx], space.ring)
    return out


def frt_inverse(space: FrtSpace) -> np.ndarray:
    """Exact inverse of :func:`frt_forward`; every projection must be known."""
    if not space.known.all():
        raise ValueError(f"projections {space.missing} are missing; use cbp_partial")
    return slices_to_image(frt_slices(space), space.known, space.ring)


def cbp_partial(space: FrtSpace) -> np.ndarray:
    """Circulant back-projection with missing slices treated as zero.

    The result is the image plus the finite ghosts of the missing
    projections: for a single missing projection ``m`` with row ``R`` and
    image total ``S``,

        N * (cbp - img)[x, y] = -R[(y - m*x) % N] + S/N   (mod M).
    """
    return slices_to_image(frt_slices(space), space.known, space.ring)


def circulant(row, m: int, N: int) -> np.ndarray:
    """Image of one projection's line set: ``C[x, y] = row[(y - m*x) % N]``.

    For ``m == N`` (perpendicular) ``C[x, y] = row[x]``.
    """
    row = np.asarray(row, dtype=np.int64)
    x = np.arange(N)[:, None]
    y = np.arange(N)[None, :]
    if m == N:
        return np.broadcast_to(row[:, None], (N, N)).copy()
    return row[(y - m * x) % N]


def transpose_space(space: FrtSpace) -> FrtSpace:
    """Projections of the transposed image, derived from those of the image.

    Transposition swaps projection 0 with the perpendicular one and maps
    ``m`` to ``1/m`` with translates ``t -> -t/m`` otherwise.
    """
    N = space.N
    rows = np.zeros_like(space.rows)
    known = np.zeros(N + 1, dtype=bool)
    t = np.arange(N)
    rows[0], known[0] = space.rows[N], space.known[N]
    rows[N], known[N] = space.rows[0], space.known[0]
    for m in range(1, N):
        mi = mod_inverse(m, N)
        rows[m] = space.rows[mi][(-mi * t) % N]
        known[m] = space.known[mi]
    return FrtSpace(rows, space.ring, known)
