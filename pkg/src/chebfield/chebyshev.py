"""Monic integer Chebyshev-type families.

* ``S(k)``: ``S(0) = 1``, ``S(1) = x``, ``S(k) = x S(k-1) - S(k-2)``; negative
  indices via ``S(-1) = 0`` and ``S(-k) = -S(k-2)``.
* ``that(k)``: same recurrence seeded with ``2, x``; it is ``2 T(k, x/2)``.
* ``q(k) = S(k) - S(k-1)``.

All three are built with integer arithmetic only and memoized.  The caches
are plain dicts that only ever grow; a racing writer can at worst recompute
a value that is already present, so concurrent use is safe under the GIL.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from math import comb

from .polycore import ONE, X, Poly

_S_CACHE: list[Poly] = [ONE, X]
_T_CACHE: list[Poly] = [Poly((2,)), X]


class FamilyKind(Enum):
    S = "S"
    THAT = "that"
    Q = "q"


def _extend(cache: list[Poly], k: int) -> Poly:
    while len(cache) <= k:
        nxt = cache[-1].shift(1) - cache[-2]
        cache.append(nxt)
    return cache[k]


def clear_cache() -> None:
    """Drop memoized polynomials; used for cold timings."""
    del _S_CACHE[2:]
    del _T_CACHE[2:]


def cheb_S(k: int) -> Poly:
    """Chebyshev ``S(k, x) = U(k, x/2)`` for any integer ``k``.

    >>> cheb_S(4).coeffs
    (1, 0, -3, 0, 1)
    >>> cheb_S(-3).coeffs
    (0, -1)
    """
    if k >= 0:
        return _extend(_S_CACHE, k)
    if k == -1:
        return Poly()
    return -cheb_S(-k - 2)


def cheb_that(k: int) -> Poly:
    """``2 T(k, x/2)``, monic for ``k >= 1``."""
    if k < 0:
        raise ValueError(f"that(k) needs k >= 0, got {k}")
    return _extend(_T_CACHE, k)


def cheb_q(k: int) -> Poly:
    if k < 0:
        raise ValueError(f"q(k) needs k >= 0, got {k}")
    return cheb_S(k) - cheb_S(k - 1)


def family(kind: FamilyKind, k: int) -> Poly:
    return {FamilyKind.S: cheb_S, FamilyKind.THAT: cheb_that, FamilyKind.Q: cheb_q}[kind](k)


def q_coefficient(k: int, m: int) -> int:
    """Closed form for the coefficient of ``x^m`` in ``q(k)``.

    Both the sign exponent and the binomial's upper index are floored, which
    covers the two parities of ``k - m`` at once.
    """
    if m < 0 or m > k:
        return 0
    sign = -1 if ((k - m + 1) // 2) % 2 else 1
    return sign * comb((k + m) // 2, m)


def S_bisection_shift(n: int) -> tuple[Poly, Poly]:
    """``S(2n, y)`` next to ``S(n, y^2 - 2) + S(n-1, y^2 - 2)``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    inner = Poly((-2, 0, 1))
    return cheb_S(2 * n), cheb_S(n).compose(inner) + cheb_S(n - 1).compose(inner)


@dataclass
class IdentityReport:
    k_max: int
    checked: dict[str, int] = field(default_factory=dict)
    failures: dict[str, list[tuple[int, ...]]] = field(default_factory=dict)

    def record(self, name: str, ok: bool, args: tuple[int, ...]) -> None:
        self.checked[name] = self.checked.get(name, 0) + 1
        bucket = self.failures.setdefault(name, [])
        if not ok:
            bucket.append(args)

    @property
    def passed(self) -> bool:
        return not any(self.failures.values())


def identity_suite(k_max: int) -> IdentityReport:
    """Check the product, addition, doubling and composition identities for
    all index pairs up to ``k_max``."""
    if k_max < 2:
        raise ValueError("k_max must be >= 2")
    report = IdentityReport(k_max)
    x2m4 = Poly((-4, 0, 1))
    for n in range(1, k_max + 1):
        for m in range(1, n + 1):
            # S(n-1) S(m-1) (x^2 - 4) = that(n+m) - that(n-m)
            lhs = x2m4 * cheb_S(n - 1) * cheb_S(m - 1)
            report.record("that_addition", lhs == cheb_that(n + m) - cheb_that(n - m), (n, m))
            # product formula: S(n-1) S(m-1) = sum_{j<m} S(n-m+2j)
            rhs = Poly()
            for j in range(m):
                rhs = rhs + cheb_S(n - m + 2 * j)
            report.record("S_product", cheb_S(n - 1) * cheb_S(m - 1) == rhs, (n, m))
            report.record(
                "that_composition", cheb_that(n).compose(cheb_that(m)) == cheb_that(n * m), (n, m)
            )
        report.record("that_times_S", cheb_that(n) * cheb_S(n - 1) == cheb_S(2 * n - 1), (n,))
        report.record("S_doubling", cheb_S(2 * n) == cheb_S(n) ** 2 - cheb_S(n - 1) ** 2, (n,))
    return report
