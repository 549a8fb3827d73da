"""Exact modular arithmetic for number-theoretic transforms.

Every transform in this package works over the integers modulo a prime
``M = k*N + 1``.  Such a modulus has a primitive root ``a`` and therefore an
element ``alpha = a**((M-1)/N)`` of multiplicative order exactly ``N``, which
plays the role of the complex exponential in the DFT.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

# Residue products must fit in int64 without overflow.
MAX_MODULUS = 2**31


def prime_factorize(n: int) -> set[int]:
    """Return the distinct prime divisors of ``n`` (trial division)."""
    if n < 1:
        raise ValueError(f"expected a positive integer, got {n}")
    factors = set()
    d = 2
    while d * d <= n:
        while n % d == 0:
            factors.add(d)
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        factors.add(n)
    return factors


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def next_prime(n: int) -> int:
    """Smallest prime >= n."""
    n = max(n, 2)
    while not is_prime(n):
        n += 1
    return n


def mod_inverse(x: int, modulus: int) -> int:
    """Multiplicative inverse of ``x`` modulo ``modulus``, in [1, modulus-1]."""
    x %= modulus
    if x == 0:
        raise ZeroDivisionError(f"0 has no inverse modulo {modulus}")
    try:
        return pow(x, -1, modulus)
    except ValueError:
        raise ZeroDivisionError(f"{x} is not invertible modulo {modulus}") from None


def multiplicative_order(x: int, modulus: int) -> int:
    """Order of ``x`` in the unit group of the prime field ``modulus``."""
    x %= modulus
    if x == 0:
        raise ValueError("0 has no multiplicative order")
    order = modulus - 1
    for f in prime_factorize(modulus - 1):
        while order % f == 0 and pow(x, order // f, modulus) == 1:
            order //= f
    return order


def has_order(x: int, order: int, modulus: int) -> bool:
    """True when ``x`` has multiplicative order exactly ``order``."""
    if pow(x, order, modulus) != 1:
        return False
    return all(pow(x, order // f, modulus) != 1 for f in prime_factorize(order))


@lru_cache(maxsize=None)
def find_primitive_root(modulus: int) -> int:
    """Smallest *prime* primitive root of the prime ``modulus``.

    Candidates are tried in increasing prime order; ``a`` is accepted when
    ``a**((M-1)/f) != 1 (mod M)`` for every prime factor ``f`` of ``M-1``.
    For ``M = 2`` the only unit, 1, is returned.
    """
    if not is_prime(modulus):
        raise ValueError(f"modulus {modulus} is not prime")
    if modulus == 2:
        return 1
    factors = prime_factorize(modulus - 1)

    def generates(a):
        return all(pow(a, (modulus - 1) // f, modulus) != 1 for f in factors)

    for a in range(2, modulus):
        if is_prime(a) and generates(a):
            return a
    # Unreachable in practice: every prime field below 2**31 has a prime generator.
    for a in range(2, modulus):
        if generates(a):
            return a
    raise ArithmeticError(f"no primitive root found for {modulus}")


@dataclass(frozen=True)
class ModRing:
    """Integers modulo a prime ``modulus`` carrying an order-``length`` root.

    Attributes
    ----------
    modulus : int
        Prime M with ``M = 1 (mod length)``.
    primitive_root : int
        Generator of the unit group of M.
    alpha : int
        ``primitive_root**((M-1)/length)``, of multiplicative order ``length``.
    length : int
        Transform length N the ring was built for.
    """

    modulus: int
    primitive_root: int
    alpha: int
    length: int

    def __post_init__(self):
        M = self.modulus
        if not is_prime(M):
            raise ValueError(f"modulus {M} is not prime")
        if M >= MAX_MODULUS:
            raise ValueError(f"modulus {M} exceeds {MAX_MODULUS}")
        if (M - 1) % self.length:
            raise ValueError(f"{self.length} does not divide {M}-1")
        if not has_order(self.alpha, self.length, M):
            raise ValueError(f"alpha={self.alpha} does not have order {self.length} mod {M}")

    @classmethod
    def from_modulus(cls, modulus: int, length: int) -> "ModRing":
        a = find_primitive_root(modulus)
        if (modulus - 1) % length:
            raise ValueError(f"{length} does not divide {modulus}-1")
        return cls(modulus, a, pow(a, (modulus - 1) // length, modulus), length)

    def supports(self, order: int) -> bool:
        """Whether the ring contains a root of unity of the given order."""
        return (self.modulus - 1) % order == 0

    def root_of_unity(self, order: int) -> int:
        """An element of multiplicative order exactly ``order``."""
        if not self.supports(order):
            raise ValueError(f"no root of order {order} modulo {self.modulus}")
        return pow(self.primitive_root, (self.modulus - 1) // order, self.modulus)

    def inv(self, x: int) -> int:
        return mod_inverse(x, self.modulus)

    def __str__(self):
        return f"Z/{self.modulus} (N={self.length}, a={self.primitive_root}, alpha={self.alpha})"


def select_modulus(N: int, min_value: int = 256, two_adicity: int = 0,
                   max_k: int = 1 << 20) -> ModRing:
    """Smallest prime ``M = k*N*2**two_adicity + 1`` with ``M > min_value``.

    ``two_adicity > 0`` additionally places a root of unity of order
    ``2**two_adicity`` in the same ring, so that the power-of-two convolution
    inside a prime-length (Rader) transform needs no second modulus.
    """
    if not is_prime(N):
        raise ValueError(f"transform length {N} is not prime")
    step = N * (1 << two_adicity) if N != 2 else 1 << max(two_adicity, 1)
    for k in range(1, max_k + 1):
        M = k * step + 1
        if M >= MAX_MODULUS:
            break
        if M > min_value and is_prime(M):
            return ModRing.from_modulus(M, N)
    raise ArithmeticError(f"no prime modulus found for N={N}, two_adicity={two_adicity}")
