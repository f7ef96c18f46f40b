import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from services.ratcore import (RationalFunction, count_roots, poly_arith, poly_gcd, rational_roots,
                              rational_string, real_roots, resultant, substitute, to_rational)
from utils.errors import ArityError, QuarticError, UnknownSymbolError, ZeroPolynomialError

N, x, E, u = sp.symbols('N x E u')

small_rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12).map(to_rational)
coefficient_lists = st.lists(small_rationals, min_size=1, max_size=4)


def _poly(coefficients):
    return sp.Poly(sum(c * N**k for k, c in enumerate(coefficients)), N)


def test_to_rational_parses_strings():
    """Test rational strings, including a unicode minus"""
    assert to_rational('-5/2') == sp.Rational(-5, 2)
    assert to_rational('−5/2') == sp.Rational(-5, 2)
    assert to_rational(' 7 ') == 7
    assert to_rational(3) == 3


@pytest.mark.parametrize('value', [0.5, True, '1.5', '1/0', None])
def test_to_rational_rejects_inexact_values(value):
    with pytest.raises(QuarticError):
        to_rational(value)


def test_poly_arith_examples():
    p = sp.Poly(N + 1, N)
    q = sp.Poly(N - 1, N)
    assert poly_arith(p, q, 'mul') == sp.Poly(N**2 - 1, N)
    assert poly_arith(p, sp.Poly(0, N), 'add') == p
    square = sp.Poly(2 * N + 3, N)
    assert poly_arith(square, square, 'mul') == sp.Poly(4 * N**2 + 12 * N + 9, N)


def test_poly_arith_rejects_mismatched_generators():
    with pytest.raises(ArityError):
        poly_arith(sp.Poly(N, N), sp.Poly(x, x), 'add')


@given(coefficient_lists, coefficient_lists, coefficient_lists)
@settings(max_examples=200, deadline=None)
def test_ring_axioms(a, b, c):
    p, q, r = _poly(a), _poly(b), _poly(c)
    assert poly_arith(p, q, 'add') == poly_arith(q, p, 'add')
    assert poly_arith(p, q, 'mul') == poly_arith(q, p, 'mul')
    left = poly_arith(p, poly_arith(q, r, 'add'), 'mul')
    right = poly_arith(poly_arith(p, q, 'mul'), poly_arith(p, r, 'mul'), 'add')
    assert left == right


def test_substitute_composes():
    result = substitute(sp.Poly(N**2 - 1, N), {N: x + 1})
    assert result == sp.Poly(x**2 + 2 * x, x)


def test_substitute_unknown_symbol():
    with pytest.raises(UnknownSymbolError):
        substitute(sp.Poly(N**2, N), {x: 1})


def test_substitute_to_number():
    assert substitute(sp.Poly(N**2 - 1, N), {N: '1/2'}) == sp.Rational(-3, 4)


def test_substitute_keeps_large_denominators_exact():
    p = sp.Poly(sp.Rational(53, 3) * (sp.Rational(-52, 3) * N - sp.Rational(99, 5)), N)
    value = substitute(p, {N: sp.Rational(-67, 6)})
    assert value == sp.Rational(414407, 135)
    assert value.is_Rational


def test_rational_string_is_exact():
    assert rational_string(sp.Rational(414407, 135)) == '414407/135'
    assert rational_string(0.25) == '1/4'
    assert rational_string(7) == '7'
    with pytest.raises(QuarticError):
        rational_string(sp.sqrt(2))


@given(coefficient_lists, coefficient_lists, small_rationals)
@settings(max_examples=40, deadline=None)
def test_substitute_is_a_ring_homomorphism(a, b, value):
    p, q = _poly(a), _poly(b)
    product = substitute(poly_arith(p, q, 'mul'), {N: value})
    assert product == substitute(p, {N: value}) * substitute(q, {N: value})


def test_real_roots_examples():
    roots = real_roots(sp.Poly(N**2 - 1, N), interval=(-2, 2))
    assert [r.value for r in roots] == [-1, 1]
    assert all(r.is_exact for r in roots)
    single = real_roots(sp.Poly(2 + E, E))
    assert [r.value for r in single] == [-2]


def test_real_roots_isolates_irrational_roots():
    roots = real_roots(sp.Poly(N**2 - 2, N), width='1/1000000')
    assert len(roots) == 2
    for root in roots:
        assert root.width <= sp.Rational(1, 10**6)
        assert (root.lower**2 - 2) * (root.upper**2 - 2) <= 0


def test_real_roots_reports_multiplicity():
    roots = real_roots(sp.Poly((N - 1)**2 * (N + 3), N))
    assert [(r.value, r.multiplicity) for r in roots] == [(-3, 1), (1, 2)]


def test_real_roots_of_zero_polynomial():
    with pytest.raises(ZeroPolynomialError):
        real_roots(sp.Poly(0, N))


@given(st.lists(st.fractions(min_value=-10, max_value=10, max_denominator=6), min_size=1, max_size=5, unique=True))
@settings(max_examples=30, deadline=None)
def test_real_roots_of_linear_products(values):
    product = sp.Integer(1)
    for value in values:
        product *= (N - to_rational(value))
    roots = real_roots(sp.Poly(product, N))
    assert len(roots) == len(values)
    assert sorted(to_rational(v) for v in values) == [r.value for r in roots]


def test_count_roots_half_open_interval():
    p = sp.Poly((N - 1) * (N - 2) * (N - 3), N)
    assert count_roots(p, 1, 3) == 2
    assert count_roots(p, 0, 3) == 3


def test_rational_roots_from_linear_factors():
    p = sp.Poly((2 * N - 1) * (N**2 + 1) * (N + 4)**2, N)
    assert rational_roots(p) == [(-4, 2), (sp.Rational(1, 2), 1)]


def test_resultant_examples():
    res = resultant(sp.Poly(u - 1, u, E), sp.Poly(u - E, u, E), u)
    assert sp.expand(res.as_expr()**2 - (E - 1)**2) == 0
    assert resultant(sp.Poly(u, u), sp.Poly(u, u), u).is_zero


def test_resultant_of_zero_polynomials():
    with pytest.raises(ZeroPolynomialError):
        resultant(sp.Poly(0, u), sp.Poly(0, u), u)


def test_resultant_vanishes_with_common_factor():
    common = (u - E)
    p = sp.Poly(common * (u + 1), u, E)
    q = sp.Poly(common * (u - 3), u, E)
    assert resultant(p, q, u).is_zero
    assert poly_gcd(p, q).as_expr() == u - E or poly_gcd(p, q).as_expr() == E - u


root_sets = st.lists(st.integers(min_value=-6, max_value=6), min_size=1, max_size=4, unique=True)


@given(root_sets, root_sets)
@settings(max_examples=60, deadline=None)
def test_resultant_vanishes_exactly_when_gcd_is_nonconstant(left, right):
    p = sp.Poly(sp.prod([u - value for value in left]), u)
    q = sp.Poly(sp.prod([u - value for value in right]), u)
    shared = set(left) & set(right)
    assert resultant(p, q, u).is_zero == bool(shared)
    assert poly_gcd(p, q).degree() == len(shared)


def test_rational_function_reduces():
    rf = RationalFunction.from_expr((N**2 - 1) / (2 * N - 2), (N,))
    assert sp.simplify(rf.expr - (N + 1) / 2) == 0
    assert rf.evaluate(N=3) == 2
    assert (rf - rf).is_zero()


def test_rational_function_pole():
    rf = RationalFunction.from_expr(1 / (N - 2), (N,))
    with pytest.raises(ZeroPolynomialError):
        rf.evaluate(N=2)
