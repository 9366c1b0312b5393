"""Minimal polynomials ``C(n, x)`` of ``rho(n) = 2cos(pi/n)`` and arithmetic
in the field ``Q(rho(n))``.

Two independent constructions are provided.  The recursive one divides a
single Chebyshev-type polynomial by the already known ``C`` of its proper
divisors.  The subset-product one writes ``C(n, x)`` directly as a balanced
quotient of Chebyshev-type polynomials indexed by products of prime subsets.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

from . import chebyshev
from .chebyshev import cheb_q, cheb_S, cheb_that
from .numthy import (
    coprime_odd_residues,
    delta,
    divisors,
    euler_phi,
    factorize,
    is_prime,
    mobius,
    odd_part,
    two_adic_valuation,
)
from .polycore import ONE, Poly, div_exact, divmod_monic, discriminant, product


class ZeroInverse(ZeroDivisionError):
    pass


class MixedField(ValueError):
    pass


class NotInteger(ArithmeticError):
    pass


@dataclass(frozen=True)
class MinimalPoly:
    n: int
    poly: Poly

    @property
    def degree(self) -> int:
        return self.poly.degree


# construction


@lru_cache(maxsize=None)
def _recursive(n: int) -> Poly:
    if n == 1:
        return Poly((2, 1))
    if n % 2:
        num = cheb_q((n - 1) // 2)
        den = product(_recursive(d) for d in divisors(n) if 1 < d < n)
        return div_exact(num, den)
    k = two_adic_valuation(n) - 1
    op = odd_part(n)
    num = cheb_that(n // 2)
    den = product(_recursive(2 ** (k + 1) * d) for d in divisors(op) if d < op)
    return div_exact(num, den)


def minimal_poly(n: int) -> Poly:
    """``C(n, x)`` as a plain polynomial (memoized recursive construction)."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return _recursive(n)


def clear_caches() -> None:
    """Forget every memoized minimal and Chebyshev polynomial."""
    _recursive.cache_clear()
    chebyshev.clear_cache()


def minimal_poly_recursive(n: int) -> MinimalPoly:
    return MinimalPoly(n, minimal_poly(n))


def _subset_products(primes: Sequence[int], parity: int) -> list[int]:
    return [
        math.prod(c)
        for size in range(len(primes) + 1)
        if size % 2 == parity % 2
        for c in combinations(primes, size)
    ]


def dpr_factors(n: int) -> tuple[str, list[int], list[int]]:
    """Family name and numerator/denominator indices of the subset-product
    representation of ``C(n, x)`` for ``n >= 3``.

    >>> dpr_factors(1350)
    ('that', [45, 675], [135, 225])
    >>> dpr_factors(45)
    ('q', [22, 1], [7, 4])
    """
    if n < 3:
        raise ValueError("subset-product form needs n >= 3")
    fs = factorize(n)
    odd = [(p, e) for p, e in fs if p != 2]
    primes = [p for p, _ in odd]
    N = len(primes)
    if n % 2 == 0:
        k = two_adic_valuation(n) - 1
        base = 2**k * math.prod(p ** (e - 1) for p, e in odd)
        num = [base * s for s in _subset_products(primes, N)]
        den = [base * s for s in _subset_products(primes, N - 1)]
        return "that", num, den
    num = [(n // s - 1) // 2 for s in _subset_products(primes, 0)]
    den = [(n // s - 1) // 2 for s in _subset_products(primes, 1)]
    return "q", num, den


def minimal_poly_dpr(n: int) -> MinimalPoly:
    if n < 3:
        return MinimalPoly(n, Poly((2, 1)) if n == 1 else Poly((0, 1)))
    kind, num, den = dpr_factors(n)
    fam = cheb_that if kind == "that" else cheb_q
    top = product(fam(i) for i in num)
    bottom = product(fam(i) for i in den)
    return MinimalPoly(n, div_exact(top, bottom))


def psi_hat(d: int) -> Poly:
    """Monic minimal polynomial of ``2cos(2pi/d)`` for ``d >= 3``."""
    if d < 3:
        raise ValueError("psi_hat needs d >= 3")
    if d % 2 == 0:
        return minimal_poly(d // 2)
    c = minimal_poly(d).reflect()
    return -c if delta(d) % 2 else c


def s_factorization_check(n: int, l_max: int = 4) -> bool:
    if n < 2:
        raise ValueError("n must be >= 2")
    lhs = cheb_S(n - 1)
    rhs = product(psi_hat(d) for d in divisors(2 * n) if d > 2)
    if lhs != rhs:
        return False
    c = minimal_poly(n)
    return all(not divmod_monic(cheb_S(l * n - 1), c)[1] for l in range(1, l_max + 1))


def that_factor_indices(n: int) -> list[int]:
    """Indices ``m`` with ``that(n) = prod C(m)`` over ``m = 2^(k+1) d``,
    ``d | op(n)``, where ``2^k`` exactly divides ``n``."""
    k = two_adic_valuation(n)
    return [2 ** (k + 1) * d for d in divisors(odd_part(n))]


def q_factor_indices(n: int) -> list[int]:
    """Indices ``d > 1`` dividing ``2n + 1``; ``q(n)`` is the product of their C."""
    return [d for d in divisors(2 * n + 1) if d > 1]


def cyclotomic(n: int) -> Poly:
    """``n``-th cyclotomic polynomial by the Moebius quotient of ``x^d - 1``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    num, den = ONE, ONE
    for d in divisors(n):
        mu = mobius(n // d)
        term = Poly((-1,) + (0,) * (d - 1) + (1,))
        if mu == 1:
            num = num * term
        elif mu == -1:
            den = den * term
    return div_exact(num, den)


# field Q(rho(n))


def _reduce(n: int, p: Poly) -> Poly:
    c = minimal_poly(n)
    if p.degree < c.degree:
        return p
    return divmod_monic(p, c)[1]


@dataclass(frozen=True)
class FieldElement:
    """Element of ``Q(rho(n))`` in the power basis ``1, rho, ..., rho^(delta-1)``."""

    n: int
    coords: tuple[Fraction | int, ...]

    def __post_init__(self) -> None:
        d = delta(self.n)
        cs = tuple(Fraction(c) for c in self.coords)
        if len(cs) > d:
            raise ValueError(f"{len(cs)} coordinates exceed degree {d}")
        cs = cs + (Fraction(0),) * (d - len(cs))
        object.__setattr__(
            self, "coords", tuple(c.numerator if c.denominator == 1 else c for c in cs)
        )

    @classmethod
    def from_poly(cls, n: int, p: Poly) -> "FieldElement":
        return cls(n, tuple(_reduce(n, p).coeffs))

    @classmethod
    def rho(cls, n: int) -> "FieldElement":
        return cls.from_poly(n, Poly((0, 1)))

    @classmethod
    def scalar(cls, n: int, c) -> "FieldElement":
        return cls(n, (c,))

    def to_poly(self) -> Poly:
        return Poly(self.coords)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coords)

    def _check(self, other: "FieldElement") -> None:
        if other.n != self.n:
            raise MixedField(f"Q(rho({self.n})) vs Q(rho({other.n}))")

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return FieldElement.scalar(self.n, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.n, tuple(a + b for a, b in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __neg__(self) -> "FieldElement":
        return FieldElement(self.n, tuple(-a for a in self.coords))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElement.from_poly(self.n, self.to_poly() * other.to_poly())

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        """Extended Euclid over Q against ``C(n, x)``."""
        if self.is_zero():
            raise ZeroInverse("zero has no inverse")
        r0, r1 = minimal_poly(self.n), self.to_poly()
        s0, s1 = Poly(), ONE
        while r1.degree > 0:
            q, r = divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 - q * s1
        if r1.is_zero():
            raise ZeroInverse("element shares a factor with the modulus")
        return FieldElement.from_poly(self.n, s1 * Fraction(1, 1) * (1 / Fraction(r1.leading)))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __pow__(self, e: int) -> "FieldElement":
        base = self if e >= 0 else self.inverse()
        e = abs(e)
        result = FieldElement.scalar(self.n, 1)
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __float__(self) -> float:
        r = 2 * math.cos(math.pi / self.n)
        return float(sum(float(c) * r**i for i, c in enumerate(self.coords)))


def field_mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def field_inv(a: FieldElement) -> FieldElement:
    return a.inverse()


def field_pow(a: FieldElement, e: int) -> FieldElement:
    return a**e


def evaluate_in_field(p: Poly, a: FieldElement) -> FieldElement:
    acc = FieldElement.scalar(a.n, 0)
    for c in reversed(p.coeffs):
        acc = acc * a + c
    return acc


# zeros


@dataclass(frozen=True)
class ZeroTable:
    n: int
    rows: tuple[tuple[int, tuple[int, ...]], ...]

    def stripped(self) -> list[list[int]]:
        """Rows with trailing zeros removed, keeping at least one entry."""
        out = []
        for _, coords in self.rows:
            cs = list(coords)
            while len(cs) > 1 and cs[-1] == 0:
                cs.pop()
            out.append(cs)
        return out


def zeros_power_basis(n: int) -> ZeroTable:
    d = delta(n)
    rows = []
    for m in coprime_odd_residues(n):
        r = _reduce(n, cheb_that(m))
        rows.append((m, tuple(r.padded(d))))
    return ZeroTable(n, tuple(rows))


def zero_rows_vanish(n: int) -> bool:
    """Substitute every zero-table row into ``C(n, x)`` inside ``Q(rho(n))``."""
    c = minimal_poly(n)
    zero = FieldElement.scalar(n, 0)
    return all(evaluate_in_field(c, FieldElement(n, coords)) == zero
               for _, coords in zeros_power_basis(n).rows)


def zero_sign_counts_oracle(n: int) -> tuple[int, int]:
    """Count zeros ``2cos(pi m/n)`` by comparing ``2m`` with ``n``."""
    pos = neg = 0
    for m in coprime_odd_residues(n):
        if 2 * m <= n:
            pos += 1
        else:
            neg += 1
    return pos, neg


def _floor_half(num: int, den: int) -> int:
    # floor((num/den - 1) / 2) with exact rationals
    return math.floor(Fraction(num - den, 2 * den))


def zero_sign_counts(n: int) -> tuple[int, int]:
    """Positive and negative zero counts by inclusion-exclusion over the odd
    primes of ``n``.  The zero at ``x = 0`` for ``n = 2`` counts as positive."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return 0, 1
    if n & (n - 1) == 0:
        return (1, 0) if n == 2 else (n // 4, n // 4)
    primes = [p for p, _ in factorize(n) if p != 2]
    if n % 2 == 0:
        K = (n - 2) // 4
        L = 2 * K + 1
        N = (n - 2) // 2 - (n - 2) // 4
        P = n - 1
    elif n % 4 == 1:
        K = (n - 5) // 4
        L = (n - 3) // 2
        N = (n - 1) // 4
        P = n - 2
    else:
        K = (n - 3) // 4
        L = (n - 1) // 2
        N = K
        P = n - 2
    plus, minus = K, N
    for r in range(1, len(primes) + 1):
        sign = -1 if r % 2 else 1
        for combo in combinations(primes, r):
            a = math.prod(combo)
            low = _floor_half(L, a)
            plus += sign * low
            minus += sign * (_floor_half(P, a) - low)
    return plus, minus


# absolute terms


@dataclass
class CheckReport:
    name: str
    checked: int = 0
    failures: list = None

    def __post_init__(self) -> None:
        if self.failures is None:
            self.failures = []

    def record(self, ok: bool, detail) -> None:
        self.checked += 1
        if not ok:
            self.failures.append(detail)

    @property
    def passed(self) -> bool:
        return not self.failures


def constant_term(n: int) -> int:
    return minimal_poly(n).coeff(0)


def absolute_term_suite(n_max: int) -> dict[str, CheckReport]:
    """Compare ``C(n, 0)`` against the closed forms for even ``n``, ``2p``,
    powers of two and primes."""
    if n_max < 2:
        raise ValueError("n_max must be >= 2")
    reports = {k: CheckReport(k) for k in ("even", "twice_prime", "power_of_two", "prime")}
    for n in range(1, n_max + 1):
        c0 = constant_term(n)
        if n % 2 == 0:
            m = n // 2
            e = euler_phi(4 * m) // 2 + euler_phi(2 * m) // 2
            expected = (-1) ** e * cyclotomic(2 * m)(-1)
            reports["even"].record(c0 == expected, (n, c0, expected))
            if is_prime(m) and m > 2:
                reports["twice_prime"].record(c0 == (-1) ** ((m - 1) // 2) * m, (n, c0))
        if n & (n - 1) == 0:
            expected = {1: 2, 2: 0, 4: -2}.get(n, 2)
            reports["power_of_two"].record(c0 == expected, (n, c0, expected))
        if is_prime(n):
            if n == 2:
                expected = 0
            elif n % 4 == 1:
                expected = (-1) ** ((n - 1) // 4)
            else:
                expected = (-1) ** ((n + 1) // 4)
            reports["prime"].record(c0 == expected, (n, c0, expected))
    return reports


# discriminant and the q-sequence


def discriminant_of(n: int) -> int:
    return discriminant(minimal_poly(n))


def q_value(n: int) -> Fraction:
    return Fraction(n ** delta(n), discriminant_of(n))


def conjectured_q(n: int) -> Fraction | None:
    """Closed form conjectured for ``n^delta(n) / Discr(C(n, x))``.

    With no factor of two the power ``2^(k2 - 1)`` is read literally as 1/2.
    """
    if n == 1:
        return Fraction(1)
    fs = factorize(n)
    k2 = fs[0][1] if fs[0][0] == 2 else 0
    odd = [(p, e) for p, e in fs if p != 2]
    if not odd:
        return Fraction(2)
    if k2 == 0 and len(odd) == 1:
        p, k = odd[0]
        return Fraction(p ** ((p ** (k - 1) + 1) // 2))
    common = Fraction(2) ** (k2 - 1) * math.prod(p ** (e - 1) for p, e in odd)
    value = Fraction(1)
    for j, (p, _) in enumerate(odd):
        others = math.prod(q - 1 for i, (q, _) in enumerate(odd) if i != j)
        exponent = common * others
        if exponent.denominator != 1:
            return None
        value *= Fraction(p) ** exponent.numerator
    return value


@dataclass(frozen=True)
class ConjectureResult:
    n: int
    q_value: Fraction
    conjecture_value: Fraction | None
    agrees: bool


def discriminant_conjecture_check(n: int) -> ConjectureResult:
    q = q_value(n)
    if q.denominator != 1:
        raise NotInteger(f"q({n}) = {q} is not an integer")
    conj = conjectured_q(n)
    return ConjectureResult(n, q, conj, conj is not None and conj == q)


# heptagon inverse


def heptagon_norm(a: int, b: int, c: int) -> int:
    return (
        a**3 - b**3 - c**3 - 2 * a * b**2 - a * b * c + a**2 * b
        + b**2 * c + 2 * a**2 * c - a * c**2 + 2 * b * c**2
    )


def heptagon_closed_form(a: int, b: int, c: int) -> tuple[Fraction, Fraction, Fraction]:
    """Printed closed form for ``1/(a + b rho + c sigma)`` in ``Q(rho(7))``."""
    N = heptagon_norm(a, b, c)
    A = Fraction(a * a - b * b + a * b + 2 * a * c - b * c, N)
    B = Fraction(b * b - c * c + a * b, N)
    C = Fraction(c * c - b * b + a * c - b * c, N)
    return A, B, C


def _heptagon_element(a, b, c) -> FieldElement:
    # sigma = rho^2 - 1
    return FieldElement(7, (a - c, b, c))


def _heptagon_coords(e: FieldElement) -> tuple[Fraction, Fraction, Fraction]:
    r0, r1, r2 = (Fraction(x) for x in e.coords)
    return r0 + r2, r1, r2


def heptagon_inverse(a: int, b: int, c: int) -> tuple[Fraction, Fraction, Fraction]:
    return _heptagon_coords(_heptagon_element(a, b, c).inverse())


@dataclass(frozen=True)
class HeptagonComparison:
    exact: tuple[Fraction, Fraction, Fraction]
    printed: tuple[Fraction, Fraction, Fraction] | None
    agrees: bool


def heptagon_inverse_check(a: int, b: int, c: int) -> HeptagonComparison:
    exact = heptagon_inverse(a, b, c)
    if heptagon_norm(a, b, c) == 0:
        return HeptagonComparison(exact, None, False)
    printed = heptagon_closed_form(a, b, c)
    return HeptagonComparison(exact, printed, exact == printed)


def route_agreement(ns: Iterable[int]) -> list[int]:
    """Values of ``n`` where the two constructions disagree."""
    return [n for n in ns if minimal_poly_recursive(n).poly != minimal_poly_dpr(n).poly]


# factorization theorems


def that_product_check(n: int) -> bool:
    """``that(n) = prod C(2^(k+1) d)`` over ``d | op(n)``."""
    return cheb_that(n) == product(minimal_poly(m) for m in that_factor_indices(n))


def q_product_check(n: int) -> bool:
    """``q(n) = prod C(d)`` over ``1 < d | 2n + 1``."""
    return cheb_q(n) == product(minimal_poly(d) for d in q_factor_indices(n))


def that_multi_index_check(n: int) -> bool:
    """Full product over all exponent tuples ``0 <= q_i <= e_i`` for
    ``that(2^(k-1) prod p_i^e_i)`` with ``k >= 1``."""
    k = two_adic_valuation(2 * n)
    odd = odd_part(n)
    rhs = product(minimal_poly(2**k * d) for d in divisors(odd))
    return cheb_that(n) == rhs


def q_multi_index_check(n: int) -> bool:
    """``q(n) = prod_{d | 2n+1} C(d) / C(1)``."""
    full = product(minimal_poly(d) for d in divisors(2 * n + 1))
    return div_exact(full, minimal_poly(1)) == cheb_q(n)


def that_congruence_check(n: int, k: int) -> bool:
    """``that(k) = (-1)^floor(k/n) that(k mod n)`` modulo ``C(n, x)``."""
    c = minimal_poly(n)
    lhs = divmod_monic(cheb_that(k), c)[1]
    rhs = divmod_monic(cheb_that(k % n), c)[1]
    return lhs == (rhs if (k // n) % 2 == 0 else -rhs)
