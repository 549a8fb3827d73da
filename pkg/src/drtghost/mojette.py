"""Aperiodic rational-angle (Mojette) projections and their finite mapping.

An angle is a coprime direction ``[q, p]``: the projection line through a
pixel steps ``q`` along ``x`` (array rows) and ``p`` along ``y`` (columns), so
pixel ``(x, y)`` falls in bin ``b = p*x - q*y``.  On a prime grid that line is
``y = m*x + t (mod N)`` with ``m = p/q`` and ``t = -b/q``; directions with
``q = 0 (mod N)`` map to the perpendicular projection with ``t = b/p``.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass
from math import gcd
from typing import Iterator, NamedTuple

import numpy as np

from .modring import mod_inverse

COVERAGES = ("octant1", "quadrant", "halfplane")


class RationalAngle(NamedTuple):
    q: int
    p: int

    @classmethod
    def make(cls, q: int, p: int) -> "RationalAngle":
        """Validated angle in canonical sign (``q > 0``, or ``[0, 1]``)."""
        if (q, p) == (0, 0):
            raise ValueError("the zero vector is not a direction")
        if gcd(q, p) != 1:
            raise ValueError(f"[{q}, {p}] is not coprime")
        if q < 0 or (q == 0 and p < 0):
            q, p = -q, -p
        return cls(q, p)

    def __str__(self):
        return f"[{self.q},{self.p}]"


@dataclass
class MojetteProjection:
    angle: RationalAngle
    offset: int
    bins: np.ndarray

    def bin_of(self, x, y):
        return self.angle.p * np.asarray(x) - self.angle.q * np.asarray(y) - self.offset


def bin_count(angle: RationalAngle, Q: int, P: int) -> int:
    """Bins of a projection of a ``Q``-row, ``P``-column image."""
    return abs(angle.p) * (Q - 1) + abs(angle.q) * (P - 1) + 1


def mojette_project(img, angle: RationalAngle) -> MojetteProjection:
    img = np.asarray(img, dtype=np.int64)
    Q, P = img.shape
    q, p = angle
    x, y = np.meshgrid(np.arange(Q), np.arange(P), indexing="ij")
    b = p * x - q * y
    offset = int(b.min())
    bins = np.zeros(bin_count(angle, Q, P), dtype=np.int64)
    np.add.at(bins, (b - offset).ravel(), img.ravel())
    return MojetteProjection(angle, offset, bins)


def katz_check(angles, N: int) -> bool:
    """Katz criterion: an N-wide image is determined iff
    ``N <= 1 + max(sum |p|, sum |q|)``."""
    angles = list(angles)
    if not angles:
        raise ValueError("empty angle set")
    sp = sum(abs(a.p) for a in angles)
    sq = sum(abs(a.q) for a in angles)
    return N <= 1 + max(sp, sq)


def map_angle_to_frt(angle: RationalAngle, N: int) -> int:
    """Finite angle ``m = p/q (mod N)``, or ``N`` (perpendicular) if ``N | q``."""
    q, p = angle
    if q % N == 0:
        return N
    return (p % N) * mod_inverse(q, N) % N


def mojette_to_frt_row(proj: MojetteProjection, N: int) -> tuple[int, np.ndarray]:
    """Fold the bins of a projection onto the matching length-``N`` FRT row.

    Valid when the source image is embedded at the top-left of an ``N x N``
    grid; the row then equals ``frt_forward(grid).rows[m]`` exactly.
    """
    m = map_angle_to_frt(proj.angle, N)
    q, p = proj.angle
    b = np.arange(proj.bins.size) + proj.offset
    if m == N:
        t = b * mod_inverse(p, N) % N
    else:
        t = -b * mod_inverse(q, N) % N
    row = np.zeros(N, dtype=np.int64)
    np.add.at(row, t, proj.bins)
    return m, row


def in_coverage(angle: RationalAngle, coverage: str) -> bool:
    q, p = angle
    if coverage == "halfplane":
        return True
    if coverage == "quadrant":
        return p >= 0
    if coverage == "octant1":
        return q > 0 and 0 <= p <= q
    raise ValueError(f"unknown coverage {coverage!r}; choose from {COVERAGES}")


def enumerate_angles(coverage: str = "halfplane", max_l1: int | None = None,
                     Q: int | None = None, P: int | None = None) -> Iterator[RationalAngle]:
    """Coprime directions in ``coverage``, shortest first.

    Order: fewest bins for a ``Q x P`` image when both are given, then
    ``|p| + |q|``, then ``|q|``, then positive ``p`` before negative.  Without
    a size the bin criterion is skipped (it agrees with ``|p| + |q|`` for
    square images).  Unbounded unless ``max_l1`` is set.
    """
    in_coverage(RationalAngle(1, 0), coverage)
    if (Q is None) != (P is None):
        raise ValueError("give both Q and P or neither")

    def shell(s):
        out = []
        for aq in range(s + 1):
            ap = s - aq
            for q, p in {(aq, ap), (aq, -ap)}:
                if (q, p) == (0, 0) or gcd(q, p) != 1:
                    continue
                a = RationalAngle.make(q, p)
                if a == (q, p) and in_coverage(a, coverage):
                    out.append(a)
        return out

    if Q is None:
        s = 1
        while max_l1 is None or s <= max_l1:
            yield from sorted(shell(s), key=lambda a: (abs(a.q), a.p < 0))
            s += 1
        return

    # Vectors longer than shell s have at least lo*(s+1)+1 bins, so anything
    # queued below that bound can be released before reading further shells.
    lo = min(Q - 1, P - 1)
    if lo == 0 and max_l1 is None:
        raise ValueError("single-row or single-column images need max_l1")
    heap = []
    s = 1
    while max_l1 is None or s <= max_l1:
        for a in shell(s):
            heapq.heappush(heap, (bin_count(a, Q, P), s, abs(a.q), a.p < 0, a))
        bound = lo * (s + 1) + 1
        while heap and heap[0][0] <= bound:
            yield heapq.heappop(heap)[-1]
        s += 1
    while heap:
        yield heapq.heappop(heap)[-1]


def generate_angle_set(count: int, coverage: str, N: int,
                       Q: int | None = None, P: int | None = None,
                       max_l1: int | None = None) -> list[RationalAngle]:
    """``count`` directions with pairwise distinct finite angles modulo ``N``."""
    if count > N + 1:
        raise ValueError(f"at most {N + 1} distinct finite angles exist for N={N}")
    if max_l1 is None:
        max_l1 = 4 * N + 4
    chosen, used = [], set()
    for a in enumerate_angles(coverage, max_l1, Q, P):
        m = map_angle_to_frt(a, N)
        if m not in used:
            used.add(m)
            chosen.append(a)
            if len(chosen) == count:
                return chosen
    raise ValueError(f"coverage {coverage!r} yields only {len(chosen)} distinct "
                     f"finite angles for N={N} (needed {count})")


def mapping_multiplicity(N: int, coverage: str, vector_bound: int) -> np.ndarray:
    """Directions with ``max(|p|, |q|) <= vector_bound`` per finite angle.

    Entry ``N`` counts directions mapped to the perpendicular projection.
    """
    if vector_bound < 1:
        raise ValueError("vector_bound must be at least 1")
    hist = np.zeros(N + 1, dtype=np.int64)
    for a in enumerate_angles(coverage, 2 * vector_bound):
        if max(abs(a.q), abs(a.p)) <= vector_bound:
            hist[map_angle_to_frt(a, N)] += 1
    return hist
