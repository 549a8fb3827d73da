from math import gcd

import numpy as np
import pytest

from drtghost.frt import embed, frt_forward
from drtghost.modring import select_modulus
from drtghost.mojette import (RationalAngle, bin_count, enumerate_angles, generate_angle_set,
                              in_coverage, katz_check, map_angle_to_frt, mapping_multiplicity,
                              mojette_project, mojette_to_frt_row)

A = RationalAngle


def test_angle_canonical_form():
    assert RationalAngle.make(-2, 1) == (2, -1)
    assert RationalAngle.make(0, -1) == (0, 1)
    with pytest.raises(ValueError):
        RationalAngle.make(2, 4)
    with pytest.raises(ValueError):
        RationalAngle.make(0, 0)


def test_single_pixel_image():
    for a in [A(1, 0), A(0, 1), A(1, 1), A(3, -2)]:
        proj = mojette_project(np.array([[7]]), a)
        assert list(proj.bins) == [7]


def test_axis_projections():
    img = np.arange(12).reshape(3, 4)
    # direction (1, 0) steps along rows: one bin per column
    assert np.array_equal(mojette_project(img, A(1, 0)).bins[::-1], img.sum(axis=0))
    assert np.array_equal(mojette_project(img, A(0, 1)).bins, img.sum(axis=1))


def test_bin_count_examples():
    assert bin_count(A(1, 0), 4, 4) == 4
    assert bin_count(A(1, 1), 4, 4) == 7
    assert bin_count(A(1, -1), 4, 4) == 7
    assert bin_count(A(1, 2), 4, 4) == 10
    assert bin_count(A(2, 1), 3, 5) == 2 * 4 + 2 + 1


def test_bin_count_matches_occupied_range(rng):
    for _ in range(100):
        Q, P = rng.integers(1, 9, 2)
        q, p = rng.integers(-6, 7, 2)
        if gcd(q, p) != 1:
            continue
        a = RationalAngle.make(int(q), int(p))
        x, y = np.meshgrid(np.arange(Q), np.arange(P), indexing="ij")
        b = a.p * x - a.q * y
        assert b.max() - b.min() + 1 == bin_count(a, Q, P)
        assert mojette_project(np.ones((Q, P)), a).bins.sum() == Q * P


def test_katz_examples():
    three_angles = [A(1, 1), A(1, -1), A(1, -2)]
    assert katz_check(three_angles, 4)
    assert katz_check(three_angles, 5)
    assert not katz_check(three_angles, 6)
    with pytest.raises(ValueError):
        katz_check([], 3)


def test_katz_is_sharp():
    """A set failing the criterion has a non-zero image with zero projections."""
    angles = [A(1, 0), A(0, 1), A(1, 1)]
    N = 4
    assert not katz_check(angles, N)
    # the product of the three 2-point kernels fits a 3x3 support
    ghost = np.zeros((N, N), dtype=np.int64)
    ghost[0, 0] = 1
    for a in angles:
        shifted = np.zeros_like(ghost)
        shifted[a.q:, a.p:] = ghost[:N - a.q, :N - a.p]
        ghost = ghost - shifted
    assert ghost.any()
    for a in angles:
        assert not mojette_project(ghost, a).bins.any()


def test_map_angle_examples():
    assert map_angle_to_frt(A(3, 1), 7) == 5       # 1 * 3^-1 mod 7
    assert map_angle_to_frt(A(1, 2), 5) == 2
    assert map_angle_to_frt(A(0, 1), 5) == 5
    assert map_angle_to_frt(A(1, 0), 5) == 0
    assert map_angle_to_frt(A(5, 2), 5) == 5


@pytest.mark.parametrize("N", [2, 3, 5, 7, 11, 13, 17, 19, 23])
def test_mapping_is_surjective(N):
    hit = {map_angle_to_frt(a, N) for a in enumerate_angles("halfplane", 2 * N)}
    assert hit == set(range(N + 1))


def test_rebinning_matches_frt(rng):
    for _ in range(50):
        N = int(rng.choice([5, 7, 11, 13, 17]))
        Q, P = rng.integers(1, N + 1, 2)
        ring = select_modulus(N, 256)
        img = rng.integers(0, 256, (Q, P))
        rows = frt_forward(embed(img, N), ring).rows
        q, p = rng.integers(-9, 10, 2)
        if gcd(q, p) != 1:
            continue
        m, row = mojette_to_frt_row(mojette_project(img, RationalAngle.make(int(q), int(p))), N)
        assert np.array_equal(row % ring.modulus, rows[m])


def test_coverage_predicates():
    assert in_coverage(A(1, 1), "octant1") and not in_coverage(A(1, 2), "octant1")
    assert in_coverage(A(0, 1), "quadrant") and not in_coverage(A(1, -1), "quadrant")
    assert not in_coverage(A(0, 1), "octant1")
    with pytest.raises(ValueError):
        in_coverage(A(1, 0), "sphere")


def test_enumeration_order():
    first = list(enumerate_angles("halfplane", 3))
    assert first == [A(0, 1), A(1, 0), A(1, 1), A(1, -1), A(1, 2), A(1, -2), A(2, 1), A(2, -1)]
    assert list(enumerate_angles("octant1", 5)) == [A(1, 0), A(1, 1), A(2, 1), A(3, 1),
                                                    A(3, 2), A(4, 1)]


def test_sized_enumeration_sorted_by_bins():
    angles = list(enumerate_angles("halfplane", 12, Q=5, P=20))
    counts = [bin_count(a, 5, 20) for a in angles]
    assert counts == sorted(counts)
    assert len(angles) == len(set(angles)) == len(list(enumerate_angles("halfplane", 12)))
    with pytest.raises(ValueError):
        next(enumerate_angles("halfplane", None, Q=1, P=5))


def test_quadrant_set_11x11_in_23():
    angles = generate_angle_set(12, "quadrant", 23, 11, 11)
    assert len({map_angle_to_frt(a, 23) for a in angles}) == 12
    assert all(a.p >= 0 for a in angles)
    assert angles[:5] == [A(0, 1), A(1, 0), A(1, 1), A(1, 2), A(2, 1)]


@pytest.mark.parametrize("coverage", ["quadrant", "halfplane", "octant1"])
def test_generated_sets_leave_n_minus_q_missing(coverage):
    N, Q = 23, 11
    angles = generate_angle_set(Q + 1, coverage, N, Q, Q)
    ms = {map_angle_to_frt(a, N) for a in angles}
    assert len(ms) == Q + 1 and N + 1 - len(ms) == N - Q


def test_101_angles_distinct_in_257():
    angles = generate_angle_set(101, "halfplane", 257, 100, 100)
    assert len({map_angle_to_frt(a, 257) for a in angles}) == 101
    with pytest.raises(ValueError):
        generate_angle_set(259, "halfplane", 257)


def test_octant_cannot_supply_every_angle():
    with pytest.raises(ValueError):
        generate_angle_set(6, "octant1", 5, max_l1=5)
    # [5, 1] is the shortest first-octant direction reaching PERP
    assert len(generate_angle_set(6, "octant1", 5, max_l1=6)) == 6


def test_multiplicity():
    N = 23
    hist = mapping_multiplicity(N, "halfplane", 1)
    assert hist.max() <= 1 and hist.sum() == 4
    hist = mapping_multiplicity(N, "quadrant", 10)
    expected = sum(1 for q in range(11) for p in range(11) if gcd(q, p) == 1)
    assert hist.sum() == expected
    with pytest.raises(ValueError):
        mapping_multiplicity(N, "quadrant", 0)
