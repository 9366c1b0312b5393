"""Dense univariate polynomials with exact integer or rational coefficients.

Coefficients are stored in ascending order of degree, so ``Poly((1, 0, -2))``
is ``1 - 2x^2``.  The zero polynomial has no coefficients and degree -1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import zip_longest
from numbers import Rational
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction]

_SUPERSCRIPTS = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")
MINUS = "−"


class NonzeroRemainder(ArithmeticError):
    """Raised when an exact division leaves a remainder."""


def _normalize(value: Scalar) -> Scalar:
    if isinstance(value, Fraction) and value.denominator == 1:
        return value.numerator
    return value


@dataclass(frozen=True)
class Poly:
    """Immutable polynomial over Z or Q.

    >>> Poly.from_coeffs([-1, 0, 1]) * Poly.from_coeffs([1, 1])
    Poly(coeffs=(-1, -1, 1, 1))
    """

    coeffs: tuple[Scalar, ...] = ()

    def __post_init__(self) -> None:
        cs = [_normalize(c) for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[Scalar]) -> "Poly":
        return cls(tuple(coeffs))

    @classmethod
    def constant(cls, c: Scalar) -> "Poly":
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, c: Scalar = 1) -> "Poly":
        return cls((0,) * degree + (c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Scalar:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.leading == 1

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    def coeff(self, i: int) -> Scalar:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def padded(self, length: int) -> list[Scalar]:
        if self.degree >= length:
            raise ValueError(f"degree {self.degree} does not fit in {length} slots")
        return list(self.coeffs) + [0] * (length - len(self.coeffs))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    # ring operations

    @staticmethod
    def _lift(other: "Poly | Scalar") -> "Poly":
        if isinstance(other, Poly):
            return other
        if isinstance(other, Rational):
            return Poly((other,))
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return Poly(tuple(a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0)))

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Rational) and not isinstance(other, Poly):
            return Poly(tuple(c * other for c in self.coeffs))
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Poly":
        if exponent < 0:
            raise ValueError("negative powers of polynomials are not polynomials")
        result, base = Poly((1,)), self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def scale(self, c: Scalar) -> "Poly":
        return self * c

    def shift(self, k: int) -> "Poly":
        """Multiply by ``x**k``."""
        return Poly((0,) * k + self.coeffs) if self.coeffs else self

    def reflect(self) -> "Poly":
        """The polynomial ``p(-x)``."""
        return Poly(tuple(-c if i % 2 else c for i, c in enumerate(self.coeffs)))

    def derivative(self) -> "Poly":
        return Poly(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def __call__(self, value):
        """Horner evaluation; works for numbers and for any ring element."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def compose(self, inner: "Poly") -> "Poly":
        acc = Poly()
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def __divmod__(self, divisor: "Poly") -> tuple["Poly", "Poly"]:
        return poly_divmod(self, divisor)

    def __floordiv__(self, divisor: "Poly") -> "Poly":
        return poly_divmod(self, divisor)[0]

    def __mod__(self, divisor: "Poly") -> "Poly":
        return poly_divmod(self, divisor)[1]

    def monic(self) -> "Poly":
        if not self.coeffs:
            raise ZeroDivisionError("zero polynomial has no leading coefficient")
        lc = Fraction(self.leading)
        return Poly(tuple(Fraction(c) / lc for c in self.coeffs))

    # rendering

    def __str__(self) -> str:
        return render(self)


ZERO = Poly()
ONE = Poly((1,))
X = Poly((0, 1))


def poly_divmod(num: Poly, den: Poly) -> tuple[Poly, Poly]:
    """Quotient and remainder.  Integer arithmetic is kept whenever the
    divisor is monic; otherwise the computation runs over Q."""
    if den.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(num.coeffs)
    dd = den.degree
    lc = den.leading
    if lc not in (1, -1):
        lc = Fraction(lc)
    if len(rem) <= dd:
        return Poly(), num
    quot = [0] * (len(rem) - dd)
    dcs = den.coeffs
    for i in range(len(rem) - 1, dd - 1, -1):
        c = rem[i]
        if c == 0:
            continue
        q = c * lc if lc in (1, -1) else c / lc
        quot[i - dd] = q
        base = i - dd
        for j in range(dd + 1):
            rem[base + j] -= q * dcs[j]
    return Poly(tuple(quot)), Poly(tuple(rem[:dd]))


def divmod_monic(p: Poly, m: Poly) -> tuple[Poly, Poly]:
    """``p = m*q + r`` with ``deg r < deg m`` for a monic divisor."""
    if not m.is_monic() or m.degree < 1:
        raise ValueError("divisor must be monic of degree >= 1")
    return poly_divmod(p, m)


def div_exact(num: Poly, den: Poly) -> Poly:
    quot, rem = poly_divmod(num, den)
    if rem:
        raise NonzeroRemainder(f"remainder {rem.coeffs} when dividing by {den.coeffs}")
    return quot


def product(polys: Iterable[Poly]) -> Poly:
    acc = ONE
    for p in polys:
        acc = acc * p
    return acc


def _exact_int_div(p: Poly, c: int) -> Poly:
    out = []
    for a in p.coeffs:
        q, r = divmod(a, c)
        if r:
            raise NonzeroRemainder(f"{a} not divisible by {c}")
        out.append(q)
    return Poly(tuple(out))


def _prem(a: Poly, b: Poly) -> Poly:
    """Pseudo-remainder of ``lc(b)**(deg a - deg b + 1) * a`` by ``b``."""
    lc = b.leading
    rem = list(a.coeffs)
    db = b.degree
    bc = b.coeffs
    e = a.degree - db + 1
    for i in range(len(rem) - 1, db - 1, -1):
        c = rem[i]
        rem = [x * lc for x in rem]
        if c:
            base = i - db
            for j in range(db + 1):
                rem[base + j] -= c * bc[j]
        e -= 1
        rem.pop()
    if e:
        rem = [x * lc**e for x in rem]
    return Poly(tuple(rem))


def resultant(p: Poly, q: Poly) -> int:
    """Resultant of two integer polynomials by the subresultant PRS.

    >>> resultant(Poly((-2, 0, 1)), Poly((0, 2)))
    -8
    """
    if p.is_zero() or q.is_zero():
        raise ValueError("resultant of a zero polynomial")
    if not (p.is_integral() and q.is_integral()):
        raise TypeError("resultant is implemented for integer polynomials")
    a, b = p, q
    sign = 1
    if a.degree < b.degree:
        a, b = b, a
        if a.degree % 2 and b.degree % 2:
            sign = -1
    if b.degree == 0:
        return sign * b.leading**a.degree
    g, h = 1, 1
    while True:
        d = a.degree - b.degree
        if a.degree % 2 and b.degree % 2:
            sign = -sign
        r = _prem(a, b)
        if r.is_zero():
            return 0
        a = b
        b = _exact_int_div(r, g * h**d)
        g = a.leading
        # h <- g^d / h^(d-1), exact in Z
        if d == 0:
            pass
        elif d == 1:
            h = g
        else:
            h = g**d // h ** (d - 1)
        if b.degree == 0:
            # res = sign * b^deg(a) / h^(deg(a)-1) adjusted
            da = a.degree
            if da == 1:
                return sign * b.leading
            return sign * (b.leading**da // h ** (da - 1))


def discriminant(p: Poly) -> int:
    """``(-1)**(d(d-1)/2) * res(p, p') / lc(p)``; degree-one input gives 1."""
    d = p.degree
    if d < 1:
        raise ValueError("discriminant needs degree >= 1")
    if d == 1:
        return 1
    res = resultant(p, p.derivative())
    q, r = divmod(res, p.leading)
    if r:
        raise NonzeroRemainder("resultant not divisible by leading coefficient")
    return -q if (d * (d - 1) // 2) % 2 else q


def _term(coeff: Scalar, power: int, first: bool, var: str, superscripts: bool) -> str:
    mag = abs(coeff)
    if power == 0:
        body = str(mag)
    else:
        if power == 1:
            mono = var
        elif superscripts:
            mono = var + str(power).translate(_SUPERSCRIPTS)
        else:
            mono = f"{var}^{power}"
        body = mono if mag == 1 else f"{mag}{mono}"
    minus = MINUS if superscripts else "-"
    if first:
        return (minus if coeff < 0 else "") + body
    return (f" {minus} " if coeff < 0 else " + ") + body


def render(p: Poly, var: str = "x", superscripts: bool = True) -> str:
    """Descending-power rendering such as ``x² − x − 1``."""
    if p.is_zero():
        return "0"
    parts = []
    for power in range(p.degree, -1, -1):
        c = p.coeffs[power]
        if c:
            parts.append(_term(c, power, not parts, var, superscripts))
    return "".join(parts)


def coeff_list(p: Poly | Sequence[Scalar]) -> list[Scalar]:
    return list(p.coeffs if isinstance(p, Poly) else p)
