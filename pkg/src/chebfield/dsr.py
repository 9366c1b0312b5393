"""Diagonal/side ratios of the regular n-gon.

``R_k = S(k-1, rho(n))`` is the ratio of the k-th shortest diagonal to the
side (``R_1 = 1`` is the side, ``R_2 = rho``).  Values live in the power
basis of ``Q(rho(n))``; the DSR basis ``R_1, ..., R_delta`` is only used for
presentation.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement

from .chebyshev import cheb_S, cheb_that
from .minpoly import FieldElement
from .numthy import delta
from .polycore import MINUS, Poly, render

LABELS = {1: "1", 2: "ρ", 3: "σ", 4: "τ", 5: "ω", 6: "χ"}
_SUBSCRIPTS = str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉")


def label(k: int, n: int | None = None) -> str:
    if n is not None and n > 12 and k > 1:
        return "R" + str(k).translate(_SUBSCRIPTS)
    return LABELS.get(k) or "R" + str(k).translate(_SUBSCRIPTS)


def _check_n(n: int) -> None:
    if n < 3:
        raise ValueError(f"polygon needs n >= 3, got {n}")


def dsr_element(n: int, k: int) -> FieldElement:
    _check_n(n)
    return FieldElement.from_poly(n, cheb_S(k - 1))


def canonicalize_index(n: int, k: int) -> tuple[int, int]:
    """Sign and index in ``0..n//2`` with ``R_k = sign * R_index``."""
    _check_n(n)
    r = k % (2 * n)
    sign = 1
    if r >= n:
        sign, r = -1, r - n
    if r > n // 2:
        r = n - r
    if r == 0:
        return 0, 0
    return sign, r


@dataclass(frozen=True)
class DsrProductExpansion:
    n: int
    m: int
    k: int
    terms: tuple[tuple[int, int], ...]  # (canonical index, coefficient), index ascending

    @property
    def term_count(self) -> int:
        return sum(abs(c) for _, c in self.terms)

    def to_field(self) -> FieldElement:
        acc = FieldElement.scalar(self.n, 0)
        for idx, c in self.terms:
            acc = acc + dsr_element(self.n, idx) * c
        return acc


def dpf(n: int, m: int, k: int) -> DsrProductExpansion:
    """Linearize ``R_m R_k`` as a sum of single DSRs."""
    if m < 1 or k < 1:
        raise ValueError("indices must be >= 1")
    acc: Counter[int] = Counter()
    for j in range(k):
        sign, idx = canonicalize_index(n, m + k - (2 * j + 1))
        if sign:
            acc[idx] += sign
    terms = tuple(sorted((i, c) for i, c in acc.items() if c))
    return DsrProductExpansion(n, m, k, terms)


def dpf_verify(n: int, m: int, k: int) -> bool:
    """Check the product expansion and the ``(4 - rho^2)`` variant exactly."""
    rm, rk = dsr_element(n, m), dsr_element(n, k)
    prod = rm * rk
    if prod != dpf(n, m, k).to_field():
        return False
    rho = FieldElement.rho(n)
    lhs = (4 - rho * rho) * prod
    R = lambda i: dsr_element(n, i)  # noqa: E731
    rhs = R(k - m + 1) - R(k - m - 1) - R(k + m + 1) + R(k + m - 1)
    return lhs == rhs


def difference_recurrence_holds(n: int, m: int, k: int) -> bool:
    """Second difference of ``p_k = R_m R_k`` in steps of two."""
    R = lambda i: dsr_element(n, i)  # noqa: E731
    p = lambda i: R(m) * R(i)  # noqa: E731
    c = lambda i: R(i + m + 1) - R(i - m + 1)  # noqa: E731
    return (p(k + 2) - p(k)) - (p(k) - p(k - 2)) == c(k) - c(k - 2)


def to_dsr_basis(e: FieldElement) -> list[Fraction | int]:
    """Coordinates of ``e`` in ``R_1, ..., R_delta``; ``R_j`` has degree
    ``j - 1`` and leading coefficient 1, so back substitution suffices."""
    d = delta(e.n)
    rest = [Fraction(c) for c in e.coords]
    out = [Fraction(0)] * d
    for j in range(d - 1, -1, -1):
        c = rest[j]
        if c:
            out[j] = c
            for i, s in enumerate(cheb_S(j).coeffs):
                rest[i] -= c * s
    return [c.numerator if c.denominator == 1 else c for c in out]


def dsr_rank(n: int) -> int:
    """Rank of ``R_1 .. R_{n//2}`` over Q."""
    rows = [[Fraction(c) for c in dsr_element(n, k).coords] for k in range(1, n // 2 + 1)]
    rank, col = 0, 0
    width = delta(n)
    while rank < len(rows) and col < width:
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if pivot is None:
            col += 1
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for r in range(rank + 1, len(rows)):
            f = rows[r][col] / rows[rank][col]
            if f:
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
        col += 1
    return rank


def render_combination(coeffs, n: int | None = None) -> str:
    """``[c1, c2, ...]`` in the DSR basis as e.g. ``−1 + 3σ``."""
    parts = []
    for j, c in enumerate(coeffs, start=1):
        if not c:
            continue
        lab = label(j, n)
        mag = abs(c)
        if j == 1:
            body = str(mag)
        else:
            body = lab if mag == 1 else f"{mag}{lab}"
        if not parts:
            parts.append((MINUS if c < 0 else "") + body)
        else:
            parts.append((f" {MINUS} " if c < 0 else " + ") + body)
    return "".join(parts) or "0"


def product_label(m: int, k: int, n: int | None = None) -> str:
    if m == k:
        return label(m, n) + "²"
    return label(m, n) + label(k, n)


@dataclass(frozen=True)
class ReducedAlgebraTable:
    n: int
    delta: int
    basis: tuple[int, ...]
    products: tuple[tuple[int, int, tuple], ...]
    dependencies: tuple[tuple[int, tuple], ...]
    basis_values: tuple[tuple[int, tuple[int, ...]], ...]

    def text_lines(self) -> list[str]:
        n = self.n
        basis = ", ".join(label(j, n) for j in self.basis)
        out = [f"n = {n}, δ = {self.delta}, DSR basis ⟨{basis}⟩"]
        out.append(", ".join(
            f"{product_label(m, k, n)} = {render_combination(c, n)}" for m, k, c in self.products
        ))
        if self.basis_values:
            vals = ", ".join(
                f"{label(j, n)} = {render(Poly(p), var='ρ')}" for j, p in self.basis_values
            )
            out.append(f"({vals})")
        if self.dependencies:
            deps = ", ".join(f"{label(j, n)} = {render_combination(c, n)}" for j, c in self.dependencies)
            out.append(f"[{deps}]")
        return out


def reduced_algebra_table(n: int) -> ReducedAlgebraTable:
    """Products of basis DSRs written in the DSR basis, plus the dependent
    DSRs ``R_{delta+1} .. R_{n//2}``.

    Squares come first, then mixed products in lexicographic order.  For
    ``n = 3`` the basis is ``<1>`` and the single product ``rho^2`` is listed.
    """
    _check_n(n)
    d = delta(n)
    top = max(d, 2)
    idx = range(2, top + 1)
    pairs = [(m, m) for m in idx] + [(m, k) for m, k in combinations_with_replacement(idx, 2) if m < k]
    products = tuple(
        (m, k, tuple(to_dsr_basis(dsr_element(n, m) * dsr_element(n, k)))) for m, k in pairs
    )
    deps = tuple((j, tuple(to_dsr_basis(dsr_element(n, j)))) for j in range(d + 1, n // 2 + 1))
    values = tuple((j, cheb_S(j - 1).coeffs) for j in range(3, d + 1))
    return ReducedAlgebraTable(n, d, tuple(range(1, d + 1)), products, deps, values)


def _poly_mul(a: list[FieldElement], b: list[FieldElement]) -> list[FieldElement]:
    n = a[0].n
    out = [FieldElement.scalar(n, 0) for _ in range(len(a) + len(b) - 1)]
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return out


def positive_zero_poly(n: int) -> list[FieldElement]:
    """Coefficients (ascending) of ``prod_{k=1}^{(n-1)//2} (x - that(k, rho))``."""
    _check_n(n)
    one = FieldElement.scalar(n, 1)
    poly = [one]
    for k in range(1, (n - 1) // 2 + 1):
        root = FieldElement.from_poly(n, cheb_that(k))
        poly = _poly_mul(poly, [-root, one])
    return poly


def s_factorization_over_field(n: int) -> bool:
    """``S(n-1, x) = x^theta P(x) (-1)^K P(-x)`` with ``theta = 1`` for even n."""
    P = positive_zero_poly(n)
    K = (n - 1) // 2
    P_neg = [c if i % 2 == 0 else -c for i, c in enumerate(P)]
    rhs = _poly_mul(P, P_neg)
    if K % 2:
        rhs = [-c for c in rhs]
    if n % 2 == 0:
        rhs = [FieldElement.scalar(n, 0)] + rhs
    lhs = cheb_S(n - 1).padded(len(rhs))
    return all(r == FieldElement.scalar(n, c) for r, c in zip(rhs, lhs))


def s_zero_in_powers(n: int, k: int) -> FieldElement:
    """``that(k, rho(n))``, the k-th largest positive zero of ``S(n-1, x)``."""
    if not 1 <= k <= (n - 1) // 2:
        raise ValueError("k must lie in 1..(n-1)//2")
    value = FieldElement.from_poly(n, cheb_that(k))
    assert value == dsr_element(n, k + 1) - dsr_element(n, k - 1)
    return value
