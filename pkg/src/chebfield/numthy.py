"""Elementary number theory used by the rest of the package."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import gcd, isqrt, prod
from typing import Iterator


@lru_cache(maxsize=None)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of ``n >= 1`` as ascending ``(p, e)`` pairs.

    >>> factorize(1350)
    ((2, 1), (3, 3), (5, 2))
    """
    if n < 1:
        raise ValueError(f"factorize needs n >= 1, got {n}")
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def odd_part(n: int) -> int:
    while n % 2 == 0:
        n //= 2
    return n


def two_adic_valuation(n: int) -> int:
    if n == 0:
        raise ValueError("valuation of 0 is undefined")
    return (n & -n).bit_length() - 1


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return factorize(n) == ((n, 1),)


def primes_up_to(limit: int) -> list[int]:
    if limit < 2:
        return []
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
    return [i for i, flag in enumerate(sieve) if flag]


def divisors(n: int) -> list[int]:
    ds = [1]
    for p, e in factorize(n):
        ds = [d * p**k for d in ds for k in range(e + 1)]
    return sorted(ds)


def euler_phi(n: int) -> int:
    return prod((p - 1) * p ** (e - 1) for p, e in factorize(n))


def mobius(n: int) -> int:
    fs = factorize(n)
    if any(e > 1 for _, e in fs):
        return 0
    return -1 if len(fs) % 2 else 1


def delta(n: int) -> int:
    """Degree of the minimal polynomial of 2cos(pi/n)."""
    if n < 1:
        raise ValueError(f"delta needs n >= 1, got {n}")
    return 1 if n == 1 else euler_phi(2 * n) // 2


def coprime_odd_residues(n: int) -> list[int]:
    """Odd numbers ``1 <= m <= n - 1`` coprime to ``n``; ``[1]`` for ``n = 1``.

    The list always has ``delta(n)`` entries.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n == 1:
        return [1]
    return [m for m in range(1, n, 2) if gcd(m, n) == 1]


def odd_subset_products(primes: tuple[int, ...], parity: int) -> Iterator[int]:
    """Products over subsets of ``primes`` whose size has the given parity."""
    for size in range(parity % 2, len(primes) + 1, 2):
        for subset in combinations(primes, size):
            yield prod(subset)


def triangular(k: int) -> int:
    return k * (k + 1) // 2


def is_triangular(t: int) -> bool:
    if t < 0:
        return False
    r = isqrt(8 * t + 1)
    return r * r == 8 * t + 1


def moebius_mu(n: int) -> int:
    return mobius(n)


def sqfk_set(n: int) -> frozenset[int]:
    """Distinct primes dividing ``n``."""
    return frozenset(p for p, _ in factorize(n))


def sqfk(n: int) -> int:
    """Squarefree kernel (radical) of ``n``."""
    return prod(sqfk_set(n))


def coprime_sum_identity_check(n: int) -> bool:
    """Sum of the residues below ``n`` coprime to ``n`` equals
    ``n^2/2 * prod(1 - 1/p)``, and equivalently ``n * phi(n) / 2``."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    total = sum(k for k in range(1, n) if gcd(k, n) == 1)
    product_form = Fraction(n * n, 2)
    for p in sqfk_set(n):
        product_form *= 1 - Fraction(1, p)
    return total == product_form == Fraction(n * euler_phi(n), 2)


def cosine_product_check(n: int) -> bool:
    """Exact form of ``prod_{k<n} 2cos(pi k/n)`` and ``prod_{k<n} 2sin(pi k/n) = n``.

    The cosine product equals ``(-1)^(n-1) S(n-1, 0)``; the sine product is
    ``S(n-1, 2)``.
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    from .chebyshev import cheb_S

    s = cheb_S(n - 1)
    cos_product = (-1) ** (n - 1) * s(0)
    expected = (-1) ** ((n - 1) // 2) if n % 2 else 0
    return cos_product == expected and s(2) == n
