"""The ``Modd n`` folding of the integers and its multiplicative group.

``a_n(k)`` reduces ``k`` modulo ``n`` and reflects the result to ``-k mod n``
whenever ``floor(k/n)`` is odd.  On the odd residues coprime to ``n`` this
gives a finite abelian group of order ``delta(n)`` isomorphic to the Galois
group of ``Q(2cos(pi/n))``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from math import gcd, isqrt
from typing import Callable, Hashable, Iterable, Sequence

from .chebyshev import cheb_that
from .minpoly import CheckReport, FieldElement, evaluate_in_field
from .numthy import (
    coprime_odd_residues,
    delta,
    euler_phi,
    factorize,
    is_prime,
    is_triangular,
    triangular,
)
from .polycore import Poly

_SUBSCRIPTS = str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉")
_SUPERSCRIPTS = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")
_FROM_SUB = {ord(c): str(i) for i, c in enumerate("₀₁₂₃₄₅₆₇₈₉")}
_FROM_SUP = {ord(c): str(i) for i, c in enumerate("⁰¹²³⁴⁵⁶⁷⁸⁹")}


class OddOnly(ValueError):
    pass


class NotOneModFour(ValueError):
    pass


# the folding map


def parity_sign(n: int, k: int) -> int:
    """``(-1)^floor(k/n)``, floor toward minus infinity."""
    return -1 if (k // n) % 2 else 1


def modd_reduce_int(n: int, k: int) -> int:
    return k % n if parity_sign(n, k) == 1 else (-k) % n


@dataclass(frozen=True)
class ModdContext:
    n: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")

    @cached_property
    def delta(self) -> int:
        return delta(self.n)

    @cached_property
    def M(self) -> tuple[int, ...]:
        return tuple(coprime_odd_residues(self.n))

    @cached_property
    def identity(self) -> int:
        # a_1(1) = 0, so the class of 1 is compared in reduced form
        return modd_reduce_int(self.n, 1)

    def reduce(self, k: int) -> int:
        return modd_reduce_int(self.n, k)

    def mul(self, k: int, l: int) -> int:
        return self.reduce(k * l)

    def is_one(self, k: int) -> bool:
        return self.reduce(k) == self.identity

    def power(self, a: int, e: int) -> int:
        result = 1
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return self.reduce(result)

    def canonical(self, k: int) -> int:
        """Representative of ``k`` in ``M(n)`` (``1`` stands for the identity)."""
        r = self.reduce(k)
        return 1 if r == self.identity else r


def modd_reduce(ctx: ModdContext, k: int) -> int:
    return ctx.reduce(k)


def modd_mul(ctx: ModdContext, k: int, l: int) -> int:
    return ctx.mul(k, l)


def residue_class_members(ctx: ModdContext, m: int, count: int) -> list[int]:
    """First ``count`` non-negative members of the class of ``m``, ascending."""
    n = ctx.n
    if not 0 <= m <= n - 1:
        raise ValueError(f"m must lie in [0, {n - 1}], got {m}")
    if count < 1:
        raise ValueError("count must be positive")
    if m == 0:
        return [(k - 1) * n for k in range(1, count + 1)]
    return [(k // 2) * 2 * n + (-1) ** (k + 1) * m for k in range(1, count + 1)]


def modd_lemma_suite(ctx: ModdContext, k_range: Iterable[int]) -> dict[str, CheckReport]:
    """Pointwise checks of the parity, periodicity, residue and symmetry
    lemmas, plus a witness that class-wise addition is not well defined."""
    n = ctx.n
    names = ("parity", "periodicity", "sign_symmetry", "residue_product", "double_residue",
             "negative_residue", "symmetry", "multiplicative", "non_additive")
    reports = {name: CheckReport(name) for name in names}
    ks = list(k_range)
    for k in ks:
        # members of a nonzero class share the parity of its representative
        if k % n:
            reports["parity"].record((k - ctx.reduce(k)) % 2 == 0, (n, k))
        for l in (1, 2, 3):
            reports["periodicity"].record(parity_sign(n, k) == parity_sign(n, k + 2 * n * l), (n, k, l))
        expected = parity_sign(n, k) if k % n == 0 else -parity_sign(n, k)
        reports["sign_symmetry"].record(parity_sign(n, -k) == expected, (n, k))
        r2 = k % (2 * n)
        reports["double_residue"].record(r2 in (k % n, k % n + n), (n, k))
        neg = 0 if k % n == 0 else n - k % n
        reports["negative_residue"].record((-k) % n == neg, (n, k))
        reports["symmetry"].record(ctx.reduce(-k) == ctx.reduce(k), (n, k))
        for l in ks[:: max(1, len(ks) // 12)]:
            reports["residue_product"].record((k * l) % n == (k % n) * (l % n) % n, (n, k, l))
            ok = ctx.reduce(k * l) == ctx.reduce(ctx.reduce(k) * ctx.reduce(l))
            reports["multiplicative"].record(ok, (n, k, l))
    witness = non_additivity_witness(ctx, ks)
    if n > 2 and ks:
        reports["non_additive"].record(witness is not None, (n,))
    return reports


def non_additivity_witness(ctx: ModdContext, ks: Sequence[int]) -> tuple[int, int] | None:
    """A pair ``(k, l)`` with ``a(k + l) != a(a(k) + a(l))``, if the range has one."""
    for k in ks:
        for l in ks:
            if ctx.reduce(k + l) != ctx.reduce(ctx.reduce(k) + ctx.reduce(l)):
                return k, l
    return None


# reduced odd numbers


def _require_odd(n: int) -> None:
    if n % 2 == 0 or n < 3:
        raise OddOnly(f"needs odd n >= 3, got {n}")


@dataclass(frozen=True)
class FundamentalSets:
    n: int
    extended: tuple[int, ...]
    differences: tuple[int, ...]
    f_list: tuple[int, ...]


def f_list_recipe(differences: Sequence[int]) -> list[int]:
    """Mirror the differences at the final 4, zero the ends, subtract 2,
    halve, drop the final 0 and reverse."""
    d = len(differences) - 1
    mirrored = list(differences[:d]) + [differences[d]] + list(reversed(differences[:d]))
    reduced = [0] + [x - 2 for x in mirrored[1:-1]] + [0]
    halved = [x // 2 for x in reduced]
    return list(reversed(halved[:-1]))


def f_list_direct(differences: Sequence[int]) -> list[int]:
    d = len(differences) - 1
    f = [0] * (2 * d + 1)  # 1-based
    for j in range(1, d):
        f[j] = (differences[j] - 2) // 2
    f[d] = 1
    for j in range(1, d):
        f[d + j] = f[d - j]
    f[2 * d] = 0
    return f[1:]


def fundamental_sets(n: int) -> FundamentalSets:
    _require_odd(n)
    extended = [0, *coprime_odd_residues(n), n + 2]
    differences = [b - a for a, b in zip(extended, extended[1:])]
    return FundamentalSets(n, tuple(extended), tuple(differences),
                           tuple(f_list_recipe(differences)))


def reduced_odd_sequence(n: int, k: int) -> int:
    """k-th positive odd number coprime to odd ``n``, by the floor formula."""
    _require_odd(n)
    if k < 1:
        raise ValueError("k must be >= 1")
    f = fundamental_sets(n).f_list
    length = len(f)
    return 2 * k - 1 + 2 * sum(fj * ((k + j) // length) for j, fj in enumerate(f))


def reduced_odd_enumeration(n: int, count: int) -> list[int]:
    out, m = [], 1
    while len(out) < count:
        if gcd(m, n) == 1:
            out.append(m)
        m += 2
    return out


def reduced_odd_ogf_numerator(n: int) -> Poly:
    _require_odd(n)
    length = 2 * delta(n)
    first = [reduced_odd_sequence(n, k) for k in range(1, length + 1)]
    diffs = [b - a for a, b in zip(first, first[1:])]
    return Poly((1, *diffs, 1))


def all_odd_numerator(length: int) -> Poly:
    """Numerator for the sequence of all odd numbers with period ``length``."""
    return Poly((1, *([2] * (length - 1)), 1))


def ogf_series(numerator: Poly, length: int, terms: int) -> list[int]:
    """Coefficients of x^1..x^terms in ``x N(x) / ((1 - x^L)(1 - x))``."""
    coeffs = numerator.padded(length + 1)
    out = []
    for k in range(1, terms + 1):
        # coefficient of x^j in 1/((1-x^L)(1-x)) is floor(j/L) + 1
        out.append(sum(c * ((k - 1 - i) // length + 1) for i, c in enumerate(coeffs) if k - 1 - i >= 0))
    return out


def floor_identity_check(length: int, k_range: Iterable[int]) -> bool:
    if length < 1:
        raise ValueError("length must be >= 1")
    return all(sum((k + j) // length for j in range(length)) == k for k in k_range)


# generic finite abelian groups


@dataclass(frozen=True)
class AbelianType:
    factors: tuple[tuple[int, int], ...]

    @property
    def order(self) -> int:
        out = 1
        for p, a in self.factors:
            out *= p**a
        return out

    @property
    def is_cyclic(self) -> bool:
        return len({p for p, _ in self.factors}) == len(self.factors)

    @classmethod
    def from_text(cls, text: str) -> "AbelianType":
        """Parse ``"Z₄ × Z₃²"``-style strings; factors may be written repeated
        or with an exponent."""
        factors = []
        for part in text.split("×"):
            part = part.strip()
            if not part.startswith("Z"):
                raise ValueError(f"bad factor {part!r}")
            digits = part[1:]
            base = "".join(c for c in digits if ord(c) in _FROM_SUB).translate(_FROM_SUB)
            exp = "".join(c for c in digits if ord(c) in _FROM_SUP).translate(_FROM_SUP)
            for _ in range(int(exp or 1)):
                factors.extend((p, a) for p, a in factorize(int(base)))
        factors.sort(key=lambda pa: (-pa[0], -pa[1]))
        return cls(tuple(factors))

    def render(self) -> str:
        if not self.factors:
            return "Z₁"
        mods = sorted((p**a for p, a in self.factors), reverse=True)
        counts = Counter(mods)
        parts = []
        for m in sorted(counts, reverse=True):
            part = "Z" + str(m).translate(_SUBSCRIPTS)
            if counts[m] > 1:
                part += str(counts[m]).translate(_SUPERSCRIPTS)
            parts.append(part)
        return " × ".join(parts)


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """A small abelian group given by its elements and multiplication."""

    elements: tuple[Hashable, ...]
    mul: Callable[[Hashable, Hashable], Hashable]
    identity: Hashable

    def power(self, a, e: int):
        result = self.identity
        for _ in range(e):
            result = self.mul(result, a)
        return result

    def order_of(self, a) -> int:
        h, x = 1, a
        while x != self.identity:
            x = self.mul(x, a)
            h += 1
        return h

    def cycle(self, a) -> list:
        out, x = [a], a
        while x != self.identity:
            x = self.mul(x, a)
            out.append(x)
        return out

    def abelian_type(self) -> AbelianType:
        order = len(self.elements)
        factors = []
        for p, _ in factorize(order) if order > 1 else ():
            # log_p #{g : g^(p^j) = 1} grows by #{factors with exponent >= j}
            logs = [0]
            j = 1
            while True:
                count = sum(1 for g in self.elements if self.power(g, p**j) == self.identity)
                logs.append(_exact_log(count, p))
                if logs[-1] == logs[-2]:
                    break
                j += 1
            conj = [logs[i] - logs[i - 1] for i in range(1, len(logs) - 1)]
            exps = [sum(1 for c in conj if c > i) for i in range(conj[0])] if conj else []
            factors.extend((p, a) for a in sorted(exps, reverse=True))
        factors.sort(key=lambda pa: (-pa[0], -pa[1]))
        return AbelianType(tuple(factors))

    def maximal_cycles(self, key=lambda g: g) -> list[list]:
        subgroups: dict[frozenset, object] = {}
        for g in sorted(self.elements, key=key):
            sub = frozenset(self.cycle(g))
            subgroups.setdefault(sub, g)
        maximal = [s for s in subgroups if not any(s < t for t in subgroups)]
        gens = sorted((subgroups[s] for s in maximal), key=key)
        return [self.cycle(g) for g in gens]


def _exact_log(value: int, base: int) -> int:
    e = 0
    while value > 1:
        if value % base:
            raise ArithmeticError(f"{value} is not a power of {base}")
        value //= base
        e += 1
    return e


def modd_group(ctx: ModdContext) -> FiniteAbelianGroup:
    return FiniteAbelianGroup(ctx.M, lambda a, b: ctx.canonical(a * b), 1)


def modn_group(n: int) -> FiniteAbelianGroup:
    if n == 1:
        return FiniteAbelianGroup((1,), lambda a, b: 1, 1)
    units = tuple(k for k in range(1, n) if gcd(k, n) == 1)
    return FiniteAbelianGroup(units, lambda a, b: a * b % n, 1 % n)


# group structure


def element_order(ctx: ModdContext, a: int) -> int:
    if a % 2 == 0 and ctx.n > 1 or gcd(a, ctx.n) != 1:
        raise ValueError(f"{a} is not an odd residue coprime to {ctx.n}")
    h, x = 1, ctx.reduce(a)
    while x != ctx.identity:
        x = ctx.mul(x, a)
        h += 1
    return h


def primitive_roots(ctx: ModdContext) -> list[int]:
    if ctx.n == 1:
        return []
    return [a for a in ctx.M if element_order(ctx, a) == ctx.delta]


def primitive_root(ctx: ModdContext) -> int | None:
    """Smallest element of order ``delta(n)``; ``None`` if the group is not
    cyclic, and by convention for ``n = 1``."""
    roots = primitive_roots(ctx)
    return roots[0] if roots else None


def primitive_root_count(ctx: ModdContext) -> int:
    if ctx.n == 1:
        return 1
    return len(primitive_roots(ctx))


@dataclass(frozen=True)
class CycleStructure:
    n: int
    cycles: tuple[tuple[int, ...], ...]
    square_roots: frozenset[int] = field(default_factory=frozenset)

    @property
    def signature(self) -> tuple[tuple[int, int], ...]:
        counts = Counter(len(c) for c in self.cycles)
        return tuple(sorted(counts.items(), reverse=True))

    def signature_text(self) -> str:
        return " ".join(f"{o}{str(c).translate(_SUBSCRIPTS)}" for o, c in self.signature)

    def text(self) -> str:
        return "[" + ", ".join("[" + ", ".join(map(str, c)) + "]" for c in self.cycles) + "]"

    def markers(self) -> tuple[tuple[bool, ...], ...]:
        """Per-element flag for nontrivial square roots of 1."""
        return tuple(tuple(x in self.square_roots for x in c) for c in self.cycles)


def cycle_structure(ctx: ModdContext) -> CycleStructure:
    group = modd_group(ctx)
    cycles = tuple(tuple(c) for c in group.maximal_cycles())
    roots = frozenset(a for a in ctx.M if a != 1 and ctx.is_one(a * a))
    return CycleStructure(ctx.n, cycles, roots)


def modn_cycle_structure(n: int) -> CycleStructure:
    group = modn_group(n)
    cycles = tuple(tuple(c) for c in group.maximal_cycles())
    return CycleStructure(n, cycles)


def abelian_type(ctx: ModdContext) -> AbelianType:
    return modd_group(ctx).abelian_type()


def classical_modn_group_type(n: int) -> AbelianType:
    if n < 1:
        raise ValueError("n must be >= 1")
    return modn_group(n).abelian_type()


@dataclass(frozen=True)
class GroupRow:
    n: int
    order: int
    signature: str
    cycle_count: int
    group: str

    def as_tuple(self) -> tuple:
        return (self.n, self.order, self.signature, self.cycle_count, self.group)


def galois_row(n: int, which: str = "modd") -> GroupRow:
    if which == "modd":
        cs = cycle_structure(ModdContext(n))
        kind = abelian_type(ModdContext(n))
    elif which == "modn":
        cs = modn_cycle_structure(n)
        kind = classical_modn_group_type(n)
    else:
        raise ValueError(f"unknown group family {which!r}")
    return GroupRow(n, kind.order, cs.signature_text(), len(cs.cycles), kind.render())


def non_cyclic_rows(ns: Iterable[int], which: str = "modd") -> list[GroupRow]:
    rows = []
    for n in ns:
        kind = abelian_type(ModdContext(n)) if which == "modd" else classical_modn_group_type(n)
        if not kind.is_cyclic:
            rows.append(galois_row(n, which))
    return rows


# square roots of unity and the Wilson analog


def nontrivial_sqrt_one(ctx: ModdContext) -> int | None:
    for s in ctx.M:
        if s > 1 and ctx.is_one(s * s):
            return s
    return None


@dataclass(frozen=True)
class NiceSolution:
    p: int
    K: int
    K2: int
    l: int

    @property
    def s_hat(self) -> int:
        return 2 * self.K + 1


def _require_one_mod_four(p: int) -> None:
    if p % 4 != 1 or not is_prime(p):
        raise NotOneModFour(f"needs a prime p = 1 mod 4, got {p}")


def l_algorithm(p: int) -> tuple[int, int]:
    """Minimal ``l >= 0`` with ``k(1 + 4l) + l`` triangular, ``k = (p-1)/4``;
    returns ``(l, K)`` where ``T(K)`` is that triangular number."""
    _require_one_mod_four(p)
    k = (p - 1) // 4
    l = 0
    while True:
        t = k * (1 + 4 * l) + l
        if is_triangular(t):
            return l, (isqrt(8 * t + 1) - 1) // 2
        l += 1


def solve_nice_congruence(p: int) -> NiceSolution:
    """Smallest solution ``K`` of ``2X^2 + 2X + 1 = 0 (mod p)``, its companion
    ``K2 = p - 1 - K`` and the cofactor index ``l``."""
    _require_one_mod_four(p)
    K = next(x for x in range(p) if (2 * x * x + 2 * x + 1) % p == 0)
    l = ((4 * triangular(K) + 1) // p - 1) // 4
    l_alg, K_alg = l_algorithm(p)
    if (l_alg, K_alg) != (l, K):
        raise ArithmeticError(f"l-algorithm disagrees for p={p}: {(l_alg, K_alg)} vs {(l, K)}")
    return NiceSolution(p, K, p - 1 - K, l)


def primes_one_mod_four(count: int) -> list[int]:
    out, m = [], 5
    while len(out) < count:
        if is_prime(m):
            out.append(m)
        m += 4
    return out


def modd_product(ctx: ModdContext, values: Iterable[int]) -> int:
    acc = 1
    for v in values:
        acc = ctx.canonical(acc * v)
    return acc


def wilson_analog_check(p: int) -> bool:
    if p < 3 or not is_prime(p):
        raise ValueError(f"needs an odd prime, got {p}")
    ctx = ModdContext(p)
    prod_m = modd_product(ctx, ctx.M)
    if ((p - 1) // 2) % 2:
        return prod_m == 1
    return prod_m == solve_nice_congruence(p).s_hat


def sqrt_count_exploration(p: int, h: int) -> tuple[int, int]:
    """Number of ``X`` in ``M(p)`` with ``X^h = 1 Modd p`` next to
    ``gcd(h, (p-1)/2)``.  Exploratory only."""
    ctx = ModdContext(p)
    count = sum(1 for a in ctx.M if ctx.is_one(ctx.power(a, h)))
    return count, gcd(h, max(ctx.delta, 1))


# link to the Galois action on the zeros


def galois_automorphism_check(n: int, j: int, k_pow: int) -> bool:
    """Iterate ``rho -> that(m, rho)`` ``k_pow`` times in ``Q(rho(n))`` and
    compare with ``that(a_n(m^k_pow), rho)``, where ``m = M(n)[j]``."""
    ctx = ModdContext(n)
    if not 0 <= j < ctx.delta:
        raise ValueError(f"j must lie in [0, {ctx.delta - 1}]")
    if k_pow < 1:
        raise ValueError("k_pow must be >= 1")
    m = ctx.M[j]
    image = FieldElement.rho(n)
    step = cheb_that(m)
    for _ in range(k_pow):
        image = evaluate_in_field(step, image)
    target = ctx.canonical(m**k_pow)
    return image == evaluate_in_field(cheb_that(target), FieldElement.rho(n))


def modd_order_row(n: int) -> list[int]:
    """Orders of the elements of ``M(n)``."""
    ctx = ModdContext(n)
    return [1 if n == 1 else element_order(ctx, a) for a in ctx.M]


def odd_squarefree_composites(limit: int) -> list[int]:
    out = []
    for n in range(15, limit + 1, 2):
        fs = factorize(n)
        if len(fs) > 1 and all(e == 1 for _, e in fs):
            out.append(n)
    return out
