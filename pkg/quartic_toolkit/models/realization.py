from dataclasses import dataclass, field

import sympy as sp

N, u, t = sp.symbols('N u t')
E = sp.Symbol('E')
K = sp.Symbol('K')

CASE1 = 'CASE1'
CASE2 = 'CASE2'
UNSUPPORTED = 'UNSUPPORTED'


@dataclass(frozen=True)
class Realization:
    """Deformed-oscillator realization A = A(N), B = b(N) + b^dagger rho(N) + rho(N) b."""
    case: str
    a_of_n: object
    b_of_n: object
    rho2_of_n: object
    spec: object = field(repr=False)
    sqrt_delta: sp.Expr = None
    b_denominator: str = None
    checks: dict = field(default_factory=dict)

    def _at(self, function, n, offset):
        mapping = {N: sp.sympify(n)}
        if offset is not None:
            mapping[u] = sp.sympify(offset)
        return sp.simplify(function.expr.subs(mapping, simultaneous=True))

    def a(self, n, offset=None):
        return self._at(self.a_of_n, n, offset)

    def b(self, n, offset=None):
        return self._at(self.b_of_n, n, offset)

    def rho2(self, n, offset=None):
        return self._at(self.rho2_of_n, n, offset)

    @property
    def verified(self):
        return all(self.checks.values())

    def to_dict(self):
        return {
            'case': self.case,
            'A(N)': str(sp.factor(self.a_of_n.expr)),
            'b(N)': str(self.b_of_n.expr),
            'rho2(N)': str(sp.factor(self.rho2_of_n.expr)),
            'sqrt_delta': None if self.sqrt_delta is None else str(self.sqrt_delta),
            'b_denominator': self.b_denominator,
            'checks': dict(self.checks),
            'verified': self.verified
        }

    def __repr__(self):
        return f'<Realization {self.case} verified={self.verified}>'


@dataclass(frozen=True)
class StructureFunction:
    """Phi(N) as a polynomial in N with exact coefficients."""
    case: str
    phi: sp.Poly
    normalization: str
    table_discrepancies: tuple = ()

    @property
    def degree(self):
        return self.phi.degree()

    def at(self, n):
        return sp.simplify(self.phi.as_expr().subs(N, sp.sympify(n)))

    def in_shifted(self, offset=u):
        """Phi written in t = N + offset."""
        return sp.Poly(sp.expand(self.phi.as_expr().subs(N, t - offset)), t)

    def to_dict(self):
        coefficients = list(reversed(self.phi.all_coeffs()))
        return {
            'case': self.case,
            'degree': self.degree,
            'normalization': self.normalization,
            'coefficients': [str(sp.factor(c)) for c in coefficients],
            'table_discrepancies': list(self.table_discrepancies)
        }

    def __repr__(self):
        return f'<StructureFunction {self.case} degree={self.degree}>'
