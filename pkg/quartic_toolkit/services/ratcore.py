"""
Exact arithmetic substrate: rationals, polynomials, rational functions and
real-root isolation by Sturm sequences.

Every symbolic computation in the toolkit goes through these helpers so that
no floating-point value ever decides a sign.
"""
import logging
import re
from dataclasses import dataclass
from fractions import Fraction

import sympy as sp

from utils.errors import ArityError, QuarticError, UnknownSymbolError, ZeroPolynomialError

logger = logging.getLogger(__name__)

Rational = sp.Rational

_RATIONAL_PATTERN = re.compile(r'^[+-]?\d+(/\d+)?$')

DEFAULT_ROOT_WIDTH = sp.Rational(1, 10**12)


def to_rational(value):
    """Convert an int, Fraction, sympy Rational or rational string to a sympy Rational."""
    if isinstance(value, (bool, float)):
        raise QuarticError(f"Expected an exact rational, got {value!r}")
    if isinstance(value, sp.Rational):
        return value
    if isinstance(value, int):
        return sp.Integer(value)
    if isinstance(value, Fraction):
        return sp.Rational(value.numerator, value.denominator)
    if isinstance(value, str):
        text = value.strip().replace('−', '-').replace(' ', '')
        if not _RATIONAL_PATTERN.match(text):
            raise QuarticError(f"Not an exact rational string: {value!r}")
        numerator, _, denominator = text.partition('/')
        if denominator and int(denominator) == 0:
            raise QuarticError(f"Zero denominator in {value!r}")
        return sp.Rational(int(numerator), int(denominator or 1))
    raise QuarticError(f"Cannot interpret {value!r} as an exact rational")


def rational_string(value):
    """Serialize an exact rational as 'p/q' (or 'p' for integers)."""
    if isinstance(value, float):
        value = sp.Rational(repr(value))
    value = sp.sympify(value)
    if not value.is_Rational:
        raise QuarticError(f"Not an exact rational: {value!r}")
    return str(value)


def _width(width):
    if width is None:
        return DEFAULT_ROOT_WIDTH
    if isinstance(width, float):
        return sp.Rational(repr(width))
    return to_rational(width)


def poly_arith(p, q, op):
    """Add, subtract or multiply two polynomials over the same generators."""
    if tuple(p.gens) != tuple(q.gens):
        raise ArityError(f"Generator mismatch: {p.gens} vs {q.gens}")
    if op == 'add':
        return p + q
    if op == 'sub':
        return p - q
    if op == 'mul':
        return p * q
    raise QuarticError(f"Unknown polynomial operation: {op}")


def _as_expr(value):
    if isinstance(value, sp.Poly):
        return value.as_expr()
    if isinstance(value, (str, Fraction, int)) and not isinstance(value, bool):
        return to_rational(value)
    return sp.sympify(value)


def substitute(p, bindings):
    """
    Compose p with the given bindings.

    The result is a Poly over p's unbound generators followed by any new free
    symbols the bindings introduce; a fully evaluated polynomial comes back as
    a sympy number.
    """
    gens = list(p.gens)
    resolved = {}
    for key, value in bindings.items():
        symbol = sp.Symbol(key) if isinstance(key, str) else key
        if symbol not in gens:
            raise UnknownSymbolError(f"Symbol {symbol} is not a generator of {p.gens}",
                                     payload={'symbol': str(symbol)})
        resolved[symbol] = _as_expr(value)

    expr = sp.expand(p.as_expr().subs(resolved, simultaneous=True))
    remaining = [g for g in gens if g not in resolved]
    introduced = set()
    for value in resolved.values():
        introduced |= value.free_symbols
    extra = sorted((s for s in introduced if s not in remaining), key=lambda s: s.name)
    new_gens = remaining + extra
    if not new_gens:
        return expr
    return sp.Poly(expr, *new_gens)


def _exact_univariate(p):
    if len(p.gens) != 1:
        raise ArityError(f"Expected a univariate polynomial, got generators {p.gens}")
    if p.is_zero:
        raise ZeroPolynomialError("Root isolation of the zero polynomial")
    try:
        return sp.Poly(p.as_expr(), p.gen, domain=sp.QQ)
    except sp.PolynomialError as exc:
        raise QuarticError(f"Coefficients are not rational: {p}") from exc


def cauchy_bound(p):
    """Bound on the absolute value of every complex root of p."""
    coeffs = p.all_coeffs()
    lead = abs(coeffs[0])
    return 1 + max((abs(c) / lead for c in coeffs[1:]), default=sp.Integer(0))


def _sign_variations(sequence, x):
    signs = [sp.sign(g.eval(x)) for g in sequence]
    signs = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


@dataclass(frozen=True)
class RealRoot:
    """A real root isolated in [lower, upper] with its multiplicity."""
    lower: sp.Rational
    upper: sp.Rational
    multiplicity: int = 1

    @property
    def is_exact(self):
        return self.lower == self.upper

    @property
    def midpoint(self):
        return (self.lower + self.upper) / 2

    @property
    def width(self):
        return self.upper - self.lower

    @property
    def value(self):
        return self.lower if self.is_exact else self.midpoint

    def __float__(self):
        return float(self.midpoint)

    def to_dict(self):
        return {
            'lower': str(self.lower),
            'upper': str(self.upper),
            'midpoint': float(self.midpoint),
            'multiplicity': self.multiplicity,
            'exact': self.is_exact
        }


def count_roots(p, lower, upper):
    """Number of distinct real roots of p in (lower, upper] by Sturm's theorem."""
    p = _exact_univariate(p)
    square_free = sp.Poly(sp.quo(p, sp.gcd(p, p.diff())), p.gen, domain=sp.QQ)
    sequence = sp.sturm(square_free)
    lower, upper = to_rational(lower) if not isinstance(lower, sp.Rational) else lower, \
        to_rational(upper) if not isinstance(upper, sp.Rational) else upper
    return _sign_variations(sequence, lower) - _sign_variations(sequence, upper)


def _isolate_square_free(f, lower, upper, width):
    sequence = sp.sturm(f)
    found = []

    def variations(x):
        return _sign_variations(sequence, x)

    if f.eval(lower) == 0:
        found.append((lower, lower))

    stack = [(lower, upper, variations(lower), variations(upper))]
    while stack:
        a, b, va, vb = stack.pop()
        count = va - vb
        if count == 0:
            continue
        if count > 1:
            m = (a + b) / 2
            vm = variations(m)
            stack.append((a, m, va, vm))
            stack.append((m, b, vm, vb))
            continue
        # exactly one root in (a, b]
        while True:
            if f.eval(b) == 0:
                found.append((b, b))
                break
            if b - a <= width:
                found.append((a, b))
                break
            m = (a + b) / 2
            if f.eval(m) == 0:
                found.append((m, m))
                break
            vm = variations(m)
            if va - vm == 1:
                b, vb = m, vm
            else:
                a, va = m, vm
    return found


def real_roots(p, interval=None, width=None):
    """
    Isolate every real root of a univariate rational polynomial.

    Roots are isolated per square-free factor, so each returned interval
    carries the exact multiplicity of the root it encloses.
    """
    p = _exact_univariate(p)
    width = _width(width)
    if interval is None:
        bound = cauchy_bound(p)
        lower, upper = -bound, bound
    else:
        lower, upper = (v if isinstance(v, sp.Rational) else to_rational(v)
                        if not isinstance(v, float) else sp.Rational(repr(v)) for v in interval)
    if lower > upper:
        raise QuarticError(f"Empty interval [{lower}, {upper}]")

    roots = []
    if p.degree() == 0:
        return roots
    _, factors = p.sqf_list()
    for factor, multiplicity in factors:
        if factor.degree() < 1:
            continue
        factor = sp.Poly(factor, p.gen, domain=sp.QQ)
        for value, _ in rational_roots(factor):
            factor = sp.Poly(sp.quo(factor, sp.Poly(p.gen - value, p.gen)), p.gen, domain=sp.QQ)
            if lower <= value <= upper:
                roots.append(RealRoot(value, value, multiplicity))
        if factor.degree() < 1:
            continue
        for a, b in _isolate_square_free(factor, lower, upper, width):
            roots.append(RealRoot(a, b, multiplicity))

    roots.sort(key=lambda r: r.lower)
    logger.debug(f"Isolated {len(roots)} real roots of degree-{p.degree()} polynomial")
    return roots


def rational_roots(p):
    """Exact rational roots of p (with multiplicity), read off its linear factors."""
    p = _exact_univariate(p)
    roots = []
    _, factors = p.factor_list()
    for factor, multiplicity in factors:
        if factor.degree() == 1:
            a1, a0 = factor.all_coeffs()
            roots.append((sp.Rational(-a0, a1), multiplicity))
    roots.sort(key=lambda pair: pair[0])
    return roots


def resultant(p, q, var):
    """Sylvester resultant of p and q with respect to var, as a Poly in the other generators."""
    var = sp.Symbol(var) if isinstance(var, str) else var
    p_expr, q_expr = _as_expr(p), _as_expr(q)
    if p_expr == 0 and q_expr == 0:
        raise ZeroPolynomialError("Resultant of two zero polynomials")
    res = sp.expand(sp.resultant(p_expr, q_expr, var))
    gens = []
    for source in (p, q):
        if isinstance(source, sp.Poly):
            gens.extend(g for g in source.gens if g != var and g not in gens)
    if not gens:
        gens = sorted((res.free_symbols - {var}), key=lambda s: s.name)
    if not gens:
        return sp.Poly(res, var)
    return sp.Poly(res, *gens)


def poly_gcd(p, q):
    """Exact greatest common divisor of two polynomials over the same generators."""
    if isinstance(p, sp.Poly) and isinstance(q, sp.Poly) and tuple(p.gens) != tuple(q.gens):
        raise ArityError(f"Generator mismatch: {p.gens} vs {q.gens}")
    return sp.gcd(p, q)


@dataclass(frozen=True)
class RationalFunction:
    """A reduced quotient of two polynomial expressions in a fixed generator tuple."""
    numerator: sp.Expr
    denominator: sp.Expr
    gens: tuple

    @classmethod
    def from_expr(cls, expr, gens):
        expr = sp.cancel(sp.together(sp.sympify(expr)))
        numerator, denominator = sp.fraction(expr)
        if denominator == 0:
            raise ZeroPolynomialError("Rational function with zero denominator")
        if numerator == 0:
            return cls(sp.Integer(0), sp.Integer(1), tuple(gens))
        # monic denominator
        scale = sp.Poly(denominator, *gens).LC()
        return cls(sp.expand(numerator / scale), sp.expand(denominator / scale), tuple(gens))

    @property
    def expr(self):
        return self.numerator / self.denominator

    def numerator_poly(self):
        return sp.Poly(self.numerator, *self.gens)

    def denominator_poly(self):
        return sp.Poly(self.denominator, *self.gens)

    def subs(self, mapping):
        return sp.cancel(self.expr.subs(mapping, simultaneous=True))

    def evaluate(self, **values):
        mapping = {sp.Symbol(k): _as_expr(v) for k, v in values.items()}
        denominator = sp.simplify(self.denominator.subs(mapping))
        if denominator == 0:
            raise ZeroPolynomialError(f"Pole of {self.expr} at {values}")
        return sp.simplify(self.numerator.subs(mapping) / denominator)

    def shift(self, symbol, offset):
        """The rational function with symbol replaced by symbol + offset."""
        return RationalFunction.from_expr(self.expr.subs(symbol, symbol + offset), self.gens)

    def is_zero(self):
        return sp.cancel(self.numerator) == 0

    def __add__(self, other):
        return RationalFunction.from_expr(self.expr + _rf_expr(other), self.gens)

    def __sub__(self, other):
        return RationalFunction.from_expr(self.expr - _rf_expr(other), self.gens)

    def __mul__(self, other):
        return RationalFunction.from_expr(self.expr * _rf_expr(other), self.gens)

    def __repr__(self):
        return f'<RationalFunction ({self.numerator})/({self.denominator})>'


def _rf_expr(value):
    return value.expr if isinstance(value, RationalFunction) else _as_expr(value)
