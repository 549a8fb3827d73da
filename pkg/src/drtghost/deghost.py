"""Exact removal of finite ghosts from a partial back-projection.

Let ``D`` be the ghost built from the reversed angles ``N - m_G``.  Flipping
``D`` top to bottom gives a kernel whose transform vanishes on every missing
slice, so convolving it with the ghosted image ``G`` gives the same result as
convolving it with the true image.  Row by row this reads

    I[x] = sum_{r=0..n} D[r] (*) W[x + r]

where ``(*)`` is cyclic convolution along the row, ``n`` the number of
missing projections and ``W`` the working image.  ``D[0]`` is a delta, and
rows ``Q..N-1`` of the embedded image are zero, so processing ``x`` from
``Q-1`` down to 0 resolves one row at a time.  After each row is recovered it
is subtracted from ``W``, which leaves only ghost in that row, exactly as if
it had been redundant from the start.  All sums run on 1D transforms; the
recovered rows are inverse transformed together at the end.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .frt import FrtSpace, cbp_partial, frt_inverse, transpose_space
from .ghost import GhostSpec, build_ghost_1d
from .ntt import intt, ntt


class RedundancyError(ValueError):
    """Too few zero rows to remove the requested number of ghosts."""


class InconsistentDataError(ValueError):
    """Recovered values fall outside the pixel alphabet."""


def reversed_angles(missing, N: int) -> tuple[int, ...]:
    """``m -> (N - m) % N``; the perpendicular angle maps to itself."""
    return tuple(sorted(m if m == N else (N - m) % N for m in missing))


@dataclass
class DeghostPlan:
    spec: GhostSpec
    deconv_ghost: np.ndarray
    row_eigenvalues: np.ndarray
    Q: int

    @property
    def N(self) -> int:
        return self.spec.N


def build_deconv_ghost(spec: GhostSpec, Q: int) -> DeghostPlan:
    """Precompute the reversed-angle ghost and its row transforms.

    Raises :class:`RedundancyError` unless ``Q + n <= N``, ``n`` being the
    number of missing projections.
    """
    N = spec.N
    if not 0 < Q <= N:
        raise ValueError(f"Q must lie in 1..{N}")
    if Q + spec.count > N:
        raise RedundancyError(
            f"{spec.count} missing projections need {spec.count} redundant rows; "
            f"only {N - Q} available (Q={Q}, N={N})")
    rev = GhostSpec(N, reversed_angles(spec.missing, N), spec.ring)
    D = build_ghost_1d(rev)
    rows = D[:spec.finite_count + 1]
    return DeghostPlan(spec, D, ntt(rows, spec.ring), Q)


def deghost_rows(ghosted, plan: DeghostPlan, known=None) -> np.ndarray:
    """Recover rows ``0..Q-1`` of the image from its ghosted reconstruction.

    ``known``, if given, is the projection mask the reconstruction came from
    and must match the plan.  Rows ``Q..N-1`` of the result are zero.
    """
    spec = plan.spec
    N, M, Q = spec.N, spec.ring.modulus, plan.Q
    if known is not None and not np.array_equal(np.asarray(known, bool), spec.known_mask()):
        raise ValueError("projection mask does not match the de-ghosting plan")
    if N in spec.missing:
        raise ValueError("perpendicular projection is missing: de-ghost the transposed "
                         "problem instead (see reconstruct_space)")
    ghosted = np.asarray(ghosted, dtype=np.int64) % M
    if ghosted.shape != (N, N):
        raise ValueError(f"expected an {N}x{N} image")

    W = ntt(ghosted, spec.ring)
    D = plan.row_eigenvalues
    depth = D.shape[0]
    recovered = np.zeros((Q, N), dtype=np.int64)
    for x in range(Q - 1, -1, -1):
        rows = (x + np.arange(depth)) % N
        row = (D * W[rows] % M).sum(axis=0) % M
        recovered[x] = row
        W[x] = (W[x] - row) % M
    out = np.zeros((N, N), dtype=np.int64)
    out[:Q] = intt(recovered, spec.ring)
    return out


def lift_residues(img, alphabet_max: int = 255, modulus: int | None = None) -> np.ndarray:
    """Read residues as pixel values, failing on anything above ``alphabet_max``."""
    img = np.asarray(img, dtype=np.int64)
    if modulus is not None and modulus <= alphabet_max:
        raise ValueError(f"modulus {modulus} cannot hold values up to {alphabet_max}")
    bad = (img < 0) | (img > alphabet_max)
    if bad.any():
        x, y = np.argwhere(bad)[0]
        raise InconsistentDataError(
            f"{int(bad.sum())} residues outside [0, {alphabet_max}], "
            f"first {int(img[x, y])} at ({x}, {y})")
    return img.copy()


def reconstruct_space(space: FrtSpace, Q: int, P: int | None = None) -> np.ndarray:
    """Exact image with ``Q`` rows and ``P`` columns from partial projections.

    Rows ``Q..N-1`` (or, when the perpendicular projection is missing,
    columns ``P..N-1``) must be zero in the original.  A missing
    perpendicular projection is handled by solving the transposed problem,
    which needs projection 0 and ``P + n <= N``.
    """
    N = space.N
    P = N if P is None else P
    missing = space.missing
    if not missing:
        out = frt_inverse(space)
        out[Q:] = 0
        out[:, P:] = 0
        return out
    transposed = N in missing
    if transposed:
        if 0 in missing:
            raise RedundancyError("projections 0 and PERP are both missing")
        space = transpose_space(space)
        missing = space.missing
        Q = P
    spec = GhostSpec(N, tuple(missing), space.ring)
    plan = build_deconv_ghost(spec, Q)
    out = deghost_rows(cbp_partial(space), plan, space.known)
    return out.T if transposed else out
