import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from hecke_osp.combinat import partitions
from hecke_osp.polyring import NEGLEX, MPoly, leading_monomial
from hecke_osp.qfield import QRat
from hecke_osp.symfunc import (
    check_closure,
    demazure_character,
    elementary_sym,
    elementary_sym_eval,
    hall_littlewood_P,
    hall_littlewood_P_gf,
    homogeneous_sym,
    homogeneous_sym_eval,
    monomial_sym,
    power_sum,
    reverse_composition,
    skip_composition,
)


def from_sympy(expr, xs, n):
    poly = sympy.Poly(sympy.expand(expr), *xs)
    return MPoly(n, {tuple(m): QRat(int(c)) for m, c in poly.terms()})


def schur_bialternant(lam, n):
    xs = sympy.symbols(f"x1:{n + 1}")
    lam = list(lam) + [0] * (n - len(lam))
    num = sympy.Matrix(n, n, lambda i, j: xs[i] ** (lam[j] + n - 1 - j)).det()
    den = sympy.Matrix(n, n, lambda i, j: xs[i] ** (n - 1 - j)).det()
    return from_sympy(sympy.cancel(num / den), xs, n)


def test_monomial_sym_examples():
    x1, x2, x3 = MPoly.gens(3)
    assert monomial_sym((2, 1), 3) == (
        x1**2 * x2 + x1**2 * x3 + x2**2 * x1 + x2**2 * x3 + x3**2 * x1 + x3**2 * x2
    )
    assert monomial_sym((1, 1, 1, 1), 3).is_zero()
    assert monomial_sym((2,), 2, 4) == x1.embed(4) ** 2 + MPoly.variable(4, 2) ** 2


@pytest.mark.parametrize("n", range(1, 5))
def test_elementary_from_generating_function(n):
    xs = sympy.symbols(f"x1:{n + 1}")
    t = sympy.Symbol("t")
    gf = sympy.expand(sympy.Mul(*[1 + x * t for x in xs]))
    for d in range(n + 1):
        assert elementary_sym(d, n) == from_sympy(gf.coeff(t, d), xs, n)


@given(st.integers(0, 5), st.lists(st.integers(-3, 3), min_size=1, max_size=4))
def test_scalar_evaluators_agree_with_polynomials(d, values):
    n = len(values)
    pt = [QRat(v) for v in values]
    assert homogeneous_sym_eval(d, values) == homogeneous_sym(d, n).evaluate(pt)
    if d <= n:
        assert elementary_sym_eval(d, values) == elementary_sym(d, n).evaluate(pt)


@pytest.mark.parametrize("d", range(1, 6))
@pytest.mark.parametrize("i", range(1, 6))
def test_hall_littlewood_two_routes(d, i):
    P = hall_littlewood_P(d, i)
    assert P == hall_littlewood_P_gf(d, i)
    assert P.specialize(1) == power_sum(d, i)
    assert P.specialize(0) == homogeneous_sym(d, i)


@pytest.mark.parametrize("i", range(1, 6))
def test_hall_littlewood_leading_monomial(i):
    for k in range(1, 5):
        lm = leading_monomial(hall_littlewood_P(k, i, 5), NEGLEX)
        assert lm == tuple(k if j == i - 1 else 0 for j in range(5))


def test_hall_littlewood_degree_one():
    assert hall_littlewood_P(1, 3) == sum(MPoly.gens(3)[1:], MPoly.gens(3)[0])


def test_skip_composition_example():
    g = skip_composition({2, 5, 6}, 6)
    assert g == (0, 2, 0, 0, 4, 4)
    assert reverse_composition(g) == (4, 4, 0, 0, 2, 0)
    assert skip_composition((), 3) == (0, 0, 0)
    with pytest.raises(ValueError):
        skip_composition({0, 2}, 3)


def test_demazure_small_examples():
    x1, x2 = MPoly.gens(2)
    assert demazure_character((0, 1)) == x1 + x2
    assert demazure_character((2, 0)) == x1**2
    assert demazure_character((0, 2)) == x1**2 + x1 * x2 + x2**2


@pytest.mark.parametrize("n", [2, 3])
def test_demazure_increasing_is_schur(n):
    for d in range(1, 4):
        for lam in partitions(d):
            if len(lam) > n:
                continue
            gamma = tuple(reversed(list(lam) + [0] * (n - len(lam))))
            assert demazure_character(gamma) == schur_bialternant(lam, n)


compositions = st.lists(st.integers(0, 2), min_size=2, max_size=4).map(tuple)


@given(compositions)
def test_demazure_ascent_choice_irrelevant(gamma):
    assert demazure_character(gamma, "leftmost") == demazure_character(gamma, "rightmost")


@given(compositions)
def test_demazure_contains_its_monomial(gamma):
    kappa = demazure_character(gamma)
    assert kappa.coefficient(gamma).is_one()
    assert kappa.is_homogeneous() and kappa.degree() == sum(gamma)


@pytest.mark.parametrize("n", range(2, 7))
def test_demazure_neglex_leading_monomial(n):
    from itertools import combinations

    for r in range(1, n):
        for S in combinations(range(1, n), r):
            g = skip_composition(S, n)
            lm = leading_monomial(demazure_character(reverse_composition(g)), NEGLEX)
            assert lm == reverse_composition(g)


@pytest.mark.parametrize("n", range(2, 6))
def test_closure_identity(n):
    for i in range(1, n):
        for k in range(1, 6):
            assert check_closure(i, k, n).passed
