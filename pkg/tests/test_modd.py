import math
from collections import Counter

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from chebfield import modd
from chebfield.minpoly import FieldElement, evaluate_in_field
from chebfield.chebyshev import cheb_that
from chebfield.numthy import delta, euler_phi, factorize, is_prime, mobius
from reference import K2_PREFIX, K_PREFIX, PRIMITIVE_ROOT_PREFIX, SQRT_ONE_PREFIX, golden_rows

Ctx = modd.ModdContext
ODD_N = [3, 5, 7, 15, 21, 105]


def reduce_by_definition(n, k):
    """Fold ``k`` into ``[0, n-1]`` by the parity of ``floor(k/n)``."""
    return k % n if (k // n) % 2 == 0 else (-k) % n


# arithmetic


def test_reduce_examples():
    c6 = Ctx(6)
    assert c6.reduce(2 * 7) == 2 and c6.reduce(c6.reduce(2) * c6.reduce(7)) == 2
    assert Ctx(7).reduce(9) == 5
    assert modd.modd_mul(Ctx(7), 3, 5) == 1 and Ctx(7).is_one(15)
    assert Ctx(12).is_one(25)
    assert all(modd.modd_reduce(Ctx(n), k) == modd.modd_mul(Ctx(n), k, 1) for n in (5, 9) for k in range(-30, 30))


@given(st.integers(1, 200), st.integers(-10**6, 10**6))
def test_reduce_matches_definition(n, k):
    ctx = Ctx(n)
    assert ctx.reduce(k) == reduce_by_definition(n, k) == modd.modd_reduce_int(n, k)
    assert 0 <= ctx.reduce(k) < n
    assert ctx.reduce(-k) == ctx.reduce(k)


def test_multiplicativity_exhaustive():
    for n in range(1, 31):
        ctx = Ctx(n)
        span = range(-3 * n, 3 * n + 1)
        reduced = {k: ctx.reduce(k) for k in span}
        assert all(ctx.reduce(k * l) == ctx.reduce(reduced[k] * reduced[l]) for k in span for l in span), n


def test_residue_class_members():
    ctx = Ctx(7)
    members = modd.residue_class_members(ctx, 3, 5)
    assert members == [3, 11, 17, 25, 31]
    assert all(ctx.reduce(m) == 3 and ctx.reduce(-m) == 3 for m in members)
    assert modd.residue_class_members(ctx, 0, 4) == [0, 7, 14, 21]
    assert all(m % 2 for m in modd.residue_class_members(ctx, 3, 20))
    with pytest.raises(ValueError):
        modd.residue_class_members(ctx, 7, 3)


@given(st.integers(2, 60).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, n - 1))))
def test_residue_class_members_are_the_class(case):
    n, m = case
    ctx = Ctx(n)
    members = modd.residue_class_members(ctx, m, 12)
    expected = [k for k in range(0, 12 * n + 1) if ctx.reduce(k) == m][:12]
    assert members == expected


@pytest.mark.parametrize("n", range(1, 31))
def test_lemma_suite(n):
    reports = modd.modd_lemma_suite(Ctx(n), range(-3 * n, 3 * n + 1))
    for name, report in reports.items():
        assert report.passed, (name, report.failures[:3])


def test_non_additivity_witness():
    ctx = Ctx(6)
    assert ctx.reduce(2 + 7) == 3 and ctx.reduce(ctx.reduce(2) + ctx.reduce(7)) == 5
    assert modd.non_additivity_witness(ctx, [2, 7]) == (2, 7)


# reduced odd numbers


def test_fundamental_sets_examples():
    fs = modd.fundamental_sets(15)
    assert fs.extended == (0, 1, 7, 11, 13, 17)
    assert fs.differences == (1, 6, 4, 2, 4)
    assert fs.f_list == (2, 1, 0, 1, 0, 1, 2, 0)
    fs7 = modd.fundamental_sets(7)
    assert fs7.extended == (0, 1, 3, 5, 9) and fs7.differences == (1, 2, 2, 4)
    with pytest.raises(modd.OddOnly):
        modd.fundamental_sets(8)


@pytest.mark.parametrize("n", range(3, 301, 2))
def test_fundamental_set_shape_and_recipes(n):
    fs = modd.fundamental_sets(n)
    assert fs.differences[0] == 1 and fs.differences[-1] == 4
    assert list(fs.f_list) == modd.f_list_direct(fs.differences) == modd.f_list_recipe(fs.differences)
    assert len(fs.f_list) == 2 * delta(n)


@pytest.mark.parametrize("n", ODD_N)
def test_reduced_odd_sequence_vs_enumeration(n):
    assert [modd.reduced_odd_sequence(n, k) for k in range(1, 501)] == modd.reduced_odd_enumeration(n, 500)


def test_reduced_odd_sequence_examples():
    assert all(modd.reduced_odd_sequence(7, k) == 2 * k - 1 + 2 * ((k + 2) // 6) for k in range(1, 300))
    assert modd.reduced_odd_sequence(15, 10) == 37
    assert modd.reduced_odd_sequence(15, 14) == 49 == 30 + modd.reduced_odd_sequence(15, 6)


@pytest.mark.parametrize("n", range(3, 106, 2))
def test_reduced_odd_mirror_and_period(n):
    d = delta(n)
    o = lambda k: modd.reduced_odd_sequence(n, k)  # noqa: E731
    M = modd.fundamental_sets(n).extended[1:-1]
    for k in range(1, 2 * d + 1):
        assert o(k + 2 * d) == o(k) + 2 * n
    for k in range(1, d + 1):
        assert o(2 * d - (k - 1)) == 2 * n - M[k - 1]


def test_ogf_numerator():
    assert modd.reduced_odd_ogf_numerator(7).coeffs == (1, 2, 2, 4, 2, 2, 1)
    for n in (7, 15, 105):
        num = modd.reduced_odd_ogf_numerator(n)
        length = 2 * delta(n)
        inner = num.coeffs[1:-1]
        assert inner == tuple(reversed(inner))
        assert modd.ogf_series(num, length, 400) == modd.reduced_odd_enumeration(n, 400)
    assert modd.ogf_series(modd.all_odd_numerator(8), 8, 50) == list(range(1, 100, 2))


def test_ogf_numerator_series_against_sympy():
    z = sympy.Symbol("z")
    num = modd.reduced_odd_ogf_numerator(15)
    length = 2 * delta(15)
    expr = z * sum(c * z**i for i, c in enumerate(num.coeffs)) / ((1 - z**length) * (1 - z))
    series = sympy.Poly(sympy.series(expr, z, 0, 41).removeO(), z)
    assert [series.coeff_monomial(z**k) for k in range(1, 41)] == modd.reduced_odd_enumeration(15, 40)


def test_floor_identity():
    assert modd.floor_identity_check(1, range(-20, 20))
    assert modd.floor_identity_check(8, [-5])
    assert modd.floor_identity_check(6, [100])
    assert all(modd.floor_identity_check(L, range(-200, 200)) for L in range(1, 20))


# groups


def test_element_orders():
    assert modd.element_order(Ctx(10), 9) == 2
    assert modd.element_order(Ctx(12), 5) == 2
    assert all(modd.element_order(Ctx(n), 1) == 1 for n in range(2, 30))


@pytest.mark.parametrize("n", range(1, 201))
def test_group_laws(n):
    ctx = Ctx(n)
    Mset = set(ctx.M)
    assert all(ctx.canonical(a * b) in Mset for a in ctx.M for b in ctx.M)
    assert all(ctx.is_one(ctx.power(a, ctx.delta)) for a in ctx.M)
    assert all(ctx.delta % h == 0 for h in modd.modd_order_row(n))
    assert len(ctx.M) == ctx.delta == delta(n)


def test_primitive_roots():
    prefix = [modd.primitive_root(Ctx(n)) or 0 for n in range(1, 27)]
    assert prefix == PRIMITIVE_ROOT_PREFIX
    assert modd.primitive_roots(Ctx(13)) == [7, 11]
    assert modd.primitive_roots(Ctx(14)) == [5, 11]
    assert modd.primitive_root(Ctx(1)) is None and modd.primitive_root_count(Ctx(1)) == 1


@pytest.mark.parametrize("n", range(2, 201))
def test_primitive_root_iff_cyclic(n):
    ctx = Ctx(n)
    kind = modd.abelian_type(ctx)
    assert (modd.primitive_root(ctx) is not None) == kind.is_cyclic
    if kind.is_cyclic:
        assert modd.primitive_root_count(ctx) == euler_phi(ctx.delta)
    assert kind.order == ctx.delta


@pytest.mark.parametrize("n", range(1, 301))
def test_squarefree_delta_gives_cyclic(n):
    if mobius(delta(n)) != 0:
        assert modd.abelian_type(Ctx(n)).is_cyclic


def test_cycle_structure_examples():
    assert modd.cycle_structure(Ctx(12)).cycles == ((5, 1), (7, 1), (11, 1))
    assert modd.cycle_structure(Ctx(20)).cycles == ((3, 9, 13, 1), (7, 9, 17, 1), (11, 1), (19, 1))
    assert modd.cycle_structure(Ctx(7)).cycles == ((3, 5, 1),)
    assert modd.cycle_structure(Ctx(1)).text() == "[[1]]"
    cs = modd.cycle_structure(Ctx(20))
    assert cs.signature == ((4, 2), (2, 2))
    assert cs.signature_text() == "4₂ 2₂"
    assert 9 in cs.square_roots and cs.markers()[0] == (False, True, False, False)


def test_abelian_type_examples():
    assert modd.abelian_type(Ctx(12)) == modd.AbelianType.from_text("Z₂ × Z₂")
    assert modd.abelian_type(Ctx(40)) == modd.AbelianType.from_text("Z₄ × Z₄")
    assert modd.abelian_type(Ctx(63)).render() == "Z₃² × Z₂"
    assert modd.classical_modn_group_type(8).render() == "Z₂²"
    assert modd.classical_modn_group_type(15).render() == "Z₄ × Z₂"
    assert modd.classical_modn_group_type(7).is_cyclic
    assert modd.AbelianType.from_text("Z₆").is_cyclic
    assert modd.AbelianType.from_text("Z₄²") == modd.AbelianType.from_text("Z₄ × Z₄")


def _classical_type(n):
    """Primary decomposition of (Z/n)* from the textbook structure theorem."""
    parts = []
    for p, e in factorize(n):
        if p == 2:
            parts += [2] if e == 2 else ([2, 2 ** (e - 2)] if e >= 3 else [])
        else:
            parts.append((p - 1) * p ** (e - 1))
    factors = []
    for m in parts:
        factors += list(factorize(m))
    return Counter(factors)


@pytest.mark.parametrize("n", range(1, 201))
def test_modn_type_matches_structure_theorem(n):
    assert Counter(modd.classical_modn_group_type(n).factors) == _classical_type(n)


@given(st.integers(1, 200))
def test_cycles_cover_group_and_orders(n):
    ctx = Ctx(n)
    cs = modd.cycle_structure(ctx)
    assert set().union(*map(set, cs.cycles)) == set(ctx.M)
    exponent = max(len(c) for c in cs.cycles)
    assert exponent == max(modd.modd_order_row(n))
    assert math.prod(p**a for p, a in modd.abelian_type(ctx).factors) == ctx.delta


def test_non_cyclic_list_to_100():
    expected = [int(r[0]) for r in golden_rows("modd_non_cyclic.txt")]
    assert [row.n for row in modd.non_cyclic_rows(range(1, 101))] == expected


def test_galois_row():
    assert modd.galois_row(48, "modd").as_tuple() == (48, 16, "8₂ 4₁ 2₂", 5, "Z₈ × Z₂")
    assert modd.galois_row(48, "modn").as_tuple() == (48, 16, "4₄ 2₆", 10, "Z₄ × Z₂²")
    with pytest.raises(ValueError):
        modd.galois_row(10, "other")


# square roots of one


def test_nontrivial_sqrt_examples():
    assert modd.nontrivial_sqrt_one(Ctx(8)) == 7
    assert modd.nontrivial_sqrt_one(Ctx(13)) == 5
    primes = modd.primes_one_mod_four(15)
    assert primes == [5, 13, 17, 29, 37, 41, 53, 61, 73, 89, 97, 101, 109, 113, 137]
    assert [modd.nontrivial_sqrt_one(Ctx(p)) for p in primes] == SQRT_ONE_PREFIX


def test_nice_congruence():
    sols = [modd.solve_nice_congruence(p) for p in modd.primes_one_mod_four(17)]
    assert [s.K for s in sols] == K_PREFIX
    assert [s.K2 for s in sols] == K2_PREFIX
    assert [s.s_hat for s in sols[:15]] == SQRT_ONE_PREFIX
    s37 = modd.solve_nice_congruence(37)
    assert (s37.K, s37.l, s37.s_hat) == (15, 3, 31) and 31**2 % 37 == 36
    with pytest.raises(modd.NotOneModFour):
        modd.solve_nice_congruence(7)


def test_nice_congruence_cofactor_primes():
    for p in modd.primes_one_mod_four(200):
        if p > 1000:
            break
        sol = modd.solve_nice_congruence(p)
        assert 4 * sol.K * (sol.K + 1) // 2 + 1 == p * (4 * sol.l + 1)
        assert all(q % 4 == 1 for q, _ in factorize(4 * sol.l + 1))
        assert modd.l_algorithm(p) == (sol.l, sol.K)


@pytest.mark.parametrize("n", range(4, 201, 2))
def test_even_cyclic_sqrt(n):
    ctx = Ctx(n)
    if modd.abelian_type(ctx).is_cyclic:
        assert modd.nontrivial_sqrt_one(ctx) == n - 1


def test_wilson_analog():
    assert modd.modd_product(Ctx(7), [1, 3, 5]) == 1
    assert modd.modd_product(Ctx(13), Ctx(13).M) == 5
    assert modd.modd_product(Ctx(5), [1, 3]) == 3
    assert all(modd.wilson_analog_check(p) for p in range(3, 201) if is_prime(p))


def test_sqrt_count_exploration_runs():
    count, g = modd.sqrt_count_exploration(13, 3)
    assert count == g == 3


# Galois action


def test_galois_action_examples():
    assert modd.galois_automorphism_check(7, 1, 2)
    assert Ctx(7).canonical(9) == 5
    assert all(modd.galois_automorphism_check(n, 0, k) for n in (5, 12, 21) for k in (1, 2, 5))
    assert modd.galois_automorphism_check(12, 1, 2) and Ctx(12).canonical(25) == 1


@pytest.mark.parametrize("n", range(2, 30))
def test_galois_action_is_modd_multiplication(n):
    ctx = Ctx(n)
    rho = FieldElement.rho(n)
    images = {m: evaluate_in_field(cheb_that(m), rho) for m in ctx.M}
    for a in ctx.M:
        for b in ctx.M:
            assert evaluate_in_field(cheb_that(a), images[b]) == images[ctx.canonical(a * b)]
