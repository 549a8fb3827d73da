import pytest
from hypothesis import given, strategies as st

from drtghost.modring import (ModRing, find_primitive_root, has_order, is_prime,
                              mod_inverse, multiplicative_order, prime_factorize,
                              select_modulus)


def brute_prime_factors(n):
    return {d for d in range(2, n + 1) if n % d == 0 and all(d % e for e in range(2, d))}


@pytest.mark.parametrize("n, expected", [(1, set()), (8, {2}), (606, {2, 3, 101})])
def test_prime_factorize_examples(n, expected):
    assert prime_factorize(n) == expected


@given(st.integers(1, 3000))
def test_prime_factorize_matches_trial_division(n):
    assert prime_factorize(n) == brute_prime_factors(n)


def test_prime_factorize_rejects_zero():
    with pytest.raises(ValueError):
        prime_factorize(0)


def extended_euclid(a, b):
    if b == 0:
        return a, 1, 0
    g, x, y = extended_euclid(b, a % b)
    return g, y, x - (a // b) * y


def test_mod_inverse_examples():
    assert mod_inverse(1, 7) == 1
    assert mod_inverse(2, 5) == 3
    _, x, _ = extended_euclid(6, 607)
    assert mod_inverse(6, 607) == x % 607 == 506
    assert 6 * 506 % 607 == 1


def test_mod_inverse_zero_raises():
    with pytest.raises(ZeroDivisionError):
        mod_inverse(0, 7)
    with pytest.raises(ZeroDivisionError):
        mod_inverse(14, 7)


@pytest.mark.parametrize("M", [p for p in range(2, 102) if is_prime(p)])
def test_mod_inverse_exhaustive(M):
    for x in range(1, M):
        y = mod_inverse(x, M)
        assert 1 <= y <= M - 1 and x * y % M == 1


def test_primitive_root_examples():
    assert find_primitive_root(5) == 2
    assert find_primitive_root(2) == 1
    a = find_primitive_root(607)
    assert a == 3
    assert all(pow(a, 606 // f, 607) != 1 for f in (2, 3, 101))


@pytest.mark.parametrize("M", [p for p in range(3, 102) if is_prime(p)])
def test_primitive_root_generates_all_residues(M):
    a = find_primitive_root(M)
    assert is_prime(a)
    assert {pow(a, k, M) for k in range(1, M)} == set(range(1, M))


def test_primitive_root_rejects_composite():
    with pytest.raises(ValueError):
        find_primitive_root(15)


def test_select_modulus_reference_values():
    ring = select_modulus(101, 256)
    assert ring.modulus == 607 and (ring.modulus - 1) // 101 == 6
    assert select_modulus(13, 2).modulus == 53


def test_select_modulus_257_matches_search_oracle():
    # k*257+1 for k=1..5 is 258, 515=5*103, 772, 1029=3*7^3, 1286; k=6 gives 1543.
    oracle = next(k * 257 + 1 for k in range(1, 100)
                  if k * 257 + 1 > 256 and not brute_prime_factors(k * 257 + 1) - {k * 257 + 1})
    assert oracle == 1543
    assert select_modulus(257, 256).modulus == 1543


def test_select_modulus_two_adicity():
    ring = select_modulus(257, 256, two_adicity=8)
    assert (ring.modulus - 1) % (257 * 256) == 0
    assert ring.supports(256) and has_order(ring.root_of_unity(256), 256, ring.modulus)


@pytest.mark.parametrize("N", [2, 3, 5, 7, 11, 13, 31, 101, 257])
def test_generated_ring_alpha_has_order_N(N):
    ring = select_modulus(N, 256)
    M, alpha = ring.modulus, ring.alpha
    assert is_prime(M) and M % N == 1 % N
    assert pow(alpha, N, M) == 1
    assert all(pow(alpha, j, M) != 1 for j in range(1, N))
    assert multiplicative_order(alpha, M) == N


def test_ring_validation():
    with pytest.raises(ValueError):
        ModRing(15, 2, 4, 2)
    with pytest.raises(ValueError):
        ModRing(53, 2, 2, 13)  # 2 has order 52
    with pytest.raises(ValueError):
        select_modulus(12, 256)
    with pytest.raises(ValueError):
        ModRing.from_modulus(53, 7)
