"""Limited-angle reconstruction of a ``Q x P`` image from ``Q + 1`` projections.

The projections are folded onto the rows of a prime ``N x N`` finite Radon
space, the remaining ``N - Q`` rows are treated as missing, and the ghosts
they leave in the back-projection are removed exactly using the ``N - Q``
zero rows below the image.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from .deghost import (InconsistentDataError, RedundancyError, build_deconv_ghost,
                      deghost_rows, lift_residues)
from .frt import FrtSpace, cbp_partial, transpose_space
from .ghost import GhostSpec
from .modring import ModRing, is_prime, next_prime, select_modulus
from .mojette import (COVERAGES, RationalAngle, generate_angle_set, map_angle_to_frt,
                      mojette_project, mojette_to_frt_row)
from .ntt import rader_two_adicity


@dataclass
class PipelineConfig:
    """Parameters of one reconstruction.  ``None`` means choose automatically."""

    Q: int
    P: int
    N: int | None = None
    modulus: int | None = None
    coverage: str = "halfplane"
    projection_count: int | None = None
    seed: int = 0
    alphabet_max: int = 255

    def __post_init__(self):
        if self.coverage not in COVERAGES:
            raise ValueError(f"coverage must be one of {COVERAGES}")
        if self.N is not None and not is_prime(self.N):
            raise ValueError(f"N={self.N} is not prime")
        if self.N is not None and max(self.Q, self.P) > self.N:
            raise ValueError(f"{self.Q}x{self.P} image does not fit in N={self.N}")
        if self.projection_count is None:
            self.projection_count = default_projection_count(self.Q, self.P, self.coverage)


def default_projection_count(Q: int, P: int, coverage: str) -> int:
    """``Q + 1``; ``P + 1`` for first-octant sets, which never hold ``[0, 1]``
    and so are solved on the transposed image."""
    return P + 1 if coverage == "octant1" else Q + 1


def make_ring(N: int, modulus: int | None = None, alphabet_max: int = 255) -> ModRing:
    """Ring for size ``N``; by default one whose Rader convolution is dyadic."""
    if modulus is None:
        return select_modulus(N, alphabet_max, two_adicity=rader_two_adicity(N))
    if modulus <= alphabet_max:
        raise ValueError(f"modulus {modulus} must exceed {alphabet_max}")
    return ModRing.from_modulus(modulus, N)


def choose_size(projections, Q: int, P: int) -> int:
    """Smallest prime ``N >= max(Q, P)`` giving enough distinct finite angles.

    ``Q + 1`` distinct angles are needed for the row-wise method; with the
    perpendicular projection missing ``P + 1`` are needed instead.
    """
    N = next_prime(max(Q, P, 2))
    while True:
        ms = {map_angle_to_frt(p.angle, N) for p in projections}
        missing = N + 1 - len(ms)
        if N in ms and Q + missing <= N:
            return N
        if N not in ms and 0 in ms and P + missing <= N:
            return N
        if N > 4 * (max(Q, P) + len(projections)) + 64:
            raise RedundancyError("no prime size leaves enough redundant rows "
                                  f"for {len(projections)} projections of a {Q}x{P} image")
        N = next_prime(N + 1)


def projections_to_space(projections, N: int, ring: ModRing) -> FrtSpace:
    """Fold Mojette projections into FRT rows; duplicates must agree."""
    rows = np.zeros((N + 1, N), dtype=np.int64)
    known = np.zeros(N + 1, dtype=bool)
    M = ring.modulus
    for proj in projections:
        m, row = mojette_to_frt_row(proj, N)
        row %= M
        if known[m]:
            if not np.array_equal(rows[m], row):
                raise InconsistentDataError(f"projections {proj.angle} and an earlier "
                                            f"one map to angle {m} with different data")
            continue
        rows[m], known[m] = row, True
    return FrtSpace(rows, ring, known)


@dataclass
class Reconstruction:
    image: np.ndarray
    N: int
    ring: ModRing
    missing: int
    transposed: bool
    exact: bool
    timings: dict = field(default_factory=dict)
    deconv_ghost: np.ndarray | None = None


def reconstruct(projections, Q: int, P: int, N: int | None = None,
                modulus: int | None = None, alphabet_max: int = 255,
                verify: bool = True) -> Reconstruction:
    """Exact ``Q x P`` image from Mojette projections.

    Raises :class:`RedundancyError` when the projections leave too many
    ghosts and :class:`InconsistentDataError` when the recovered values are
    not valid pixels.  With ``verify`` the result is re-projected and
    compared with the input; ``exact`` records the outcome.
    """
    projections = list(projections)
    timings = {}
    t0 = time.perf_counter()
    if N is None:
        N = choose_size(projections, Q, P)
    elif not is_prime(N):
        raise ValueError(f"N={N} is not prime")
    if max(Q, P) > N:
        raise ValueError(f"{Q}x{P} image does not fit in N={N}")
    ring = make_ring(N, modulus, alphabet_max)
    timings["setup"] = time.perf_counter() - t0

    t = time.perf_counter()
    space = projections_to_space(projections, N, ring)
    timings["rebin"] = time.perf_counter() - t

    transposed = not space.known[N]
    rows_needed = Q
    if transposed:
        if not space.known[0]:
            raise RedundancyError("projections 0 and PERP are both missing")
        space = transpose_space(space)
        rows_needed = P
    missing = space.missing

    t = time.perf_counter()
    ghosted = cbp_partial(space)
    timings["back_projection"] = time.perf_counter() - t

    deconv_ghost = None
    if missing:
        t = time.perf_counter()
        plan = build_deconv_ghost(GhostSpec(N, tuple(missing), ring), rows_needed)
        timings["plan"] = time.perf_counter() - t
        deconv_ghost = plan.deconv_ghost
        t = time.perf_counter()
        grid = deghost_rows(ghosted, plan, space.known)
        timings["deghost"] = time.perf_counter() - t
    else:
        grid = ghosted
    if transposed:
        grid = grid.T

    t = time.perf_counter()
    if grid[Q:].any() or grid[:, P:].any():
        raise InconsistentDataError("recovered image spills outside its Q x P support")
    image = lift_residues(grid[:Q, :P], alphabet_max, ring.modulus)
    timings["lift"] = time.perf_counter() - t

    exact = True
    if verify:
        t = time.perf_counter()
        exact = all(np.array_equal(mojette_project(image, p.angle).bins, p.bins)
                    for p in projections)
        timings["verify"] = time.perf_counter() - t
    timings["total"] = time.perf_counter() - t0
    return Reconstruction(image, N, ring, len(missing), transposed, exact, timings,
                          deconv_ghost)


def random_image(Q: int, P: int, seed: int = 0, alphabet_max: int = 255) -> np.ndarray:
    return np.random.default_rng(seed).integers(0, alphabet_max + 1, (Q, P), dtype=np.int64)


def simulate(config: PipelineConfig, image=None) -> tuple[np.ndarray, list]:
    """Synthetic image (unless given) and its projections for ``config``."""
    if image is None:
        image = random_image(config.Q, config.P, config.seed, config.alphabet_max)
    return image, [mojette_project(image, a) for a in angles_for(config)]


def benchmark(config: PipelineConfig, repeats: int = 1) -> dict:
    """Stage timings (seconds, best of ``repeats``) of one synthetic run."""
    image = random_image(config.Q, config.P, config.seed, config.alphabet_max)
    angles = angles_for(config)
    t = time.perf_counter()
    projections = [mojette_project(image, a) for a in angles]
    project_time = time.perf_counter() - t
    best = None
    for _ in range(repeats):
        rec = reconstruct(projections, config.Q, config.P, config.N, config.modulus,
                          config.alphabet_max)
        if best is None or rec.timings["total"] < best.timings["total"]:
            best = rec
    return {
        "Q": config.Q, "P": config.P, "N": best.N, "modulus": best.ring.modulus,
        "projections": len(projections), "ghosts": best.missing,
        "transposed": best.transposed,
        "exact": bool(best.exact and np.array_equal(best.image, image)),
        "timings": dict(best.timings, project=project_time),
    }


def angles_for(config: PipelineConfig) -> list[RationalAngle]:
    N = config.N or next_prime(max(config.Q, config.P))
    return generate_angle_set(config.projection_count, config.coverage, N, config.Q, config.P)
