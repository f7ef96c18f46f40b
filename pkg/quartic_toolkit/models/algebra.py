from dataclasses import dataclass, field, fields, replace

import sympy as sp

from services.ratcore import to_rational
from utils.errors import ConfigError

H = sp.Symbol('H')

SCALAR_NAMES = ('tau', 'lam', 'beta')

# H-polynomial structure constants and their degree caps
POLYNOMIAL_CAPS = {
    'alpha': 1,
    'gamma': 2,
    'delta': 1,
    'epsilon': 3,
    'mu': 1,
    'nu': 2,
    'xi': 3,
    'zeta': 4,
}

DERIVED_NAMES = ('omega', 'sigma', 'rho_sc', 'eta')

MODES = ('classical', 'quantum')


def polynomial_in_h(value):
    """Build an H-expression from an ascending coefficient list or pass an expression through."""
    if value is None:
        return sp.Integer(0)
    if isinstance(value, (list, tuple)):
        return sp.expand(sum(to_rational(c) * H**k for k, c in enumerate(value)))
    if isinstance(value, sp.Poly):
        return value.as_expr()
    if isinstance(value, str):
        return to_rational(value)
    return sp.sympify(value)


def ascending_coefficients(expr):
    """Ascending-power coefficients of an H-polynomial, trailing zeros dropped."""
    expr = sp.expand(expr)
    if expr == 0:
        return []
    return list(reversed(sp.Poly(expr, H).all_coeffs()))


@dataclass(frozen=True)
class AlgebraSpec:
    """Structure constants of a classical or quantum quartic algebra."""
    mode: str = 'quantum'
    tau: sp.Expr = sp.Integer(0)
    lam: sp.Expr = sp.Integer(0)
    beta: sp.Expr = sp.Integer(0)
    alpha: sp.Expr = sp.Integer(0)
    gamma: sp.Expr = sp.Integer(0)
    delta: sp.Expr = sp.Integer(0)
    epsilon: sp.Expr = sp.Integer(0)
    mu: sp.Expr = sp.Integer(0)
    nu: sp.Expr = sp.Integer(0)
    xi: sp.Expr = sp.Integer(0)
    zeta: sp.Expr = sp.Integer(0)
    omega: sp.Expr = None
    sigma: sp.Expr = None
    rho_sc: sp.Expr = None
    eta: sp.Expr = None
    energy: sp.Expr = field(default=None, compare=False)

    def __post_init__(self):
        if self.mode not in MODES:
            raise ConfigError(f"Unknown algebra mode: {self.mode}")
        for name in SCALAR_NAMES:
            value = sp.sympify(getattr(self, name))
            if H in value.free_symbols:
                raise ConfigError(f"{name} must not depend on H")
            object.__setattr__(self, name, value)
        for name, cap in POLYNOMIAL_CAPS.items():
            value = sp.expand(polynomial_in_h(getattr(self, name)))
            if H in value.free_symbols and sp.Poly(value, H).degree() > cap:
                raise ConfigError(f"deg {name} exceeds {cap}",
                                  payload={'field': name, 'cap': cap})
            object.__setattr__(self, name, value)

    @classmethod
    def build(cls, mode='quantum', **values):
        """Construct from scalars and ascending H-coefficient lists."""
        unknown = set(values) - set(SCALAR_NAMES) - set(POLYNOMIAL_CAPS)
        if unknown:
            raise ConfigError(f"Unknown structure constants: {sorted(unknown)}")
        converted = {}
        for name, value in values.items():
            converted[name] = polynomial_in_h(value)
        return cls(mode=mode, **converted)

    @property
    def is_closed(self):
        return all(getattr(self, name) is not None for name in DERIVED_NAMES)

    @property
    def is_quantum(self):
        return self.mode == 'quantum'

    def constants(self):
        """Every structure constant by name, derived ones included when closed."""
        names = SCALAR_NAMES + tuple(POLYNOMIAL_CAPS) + DERIVED_NAMES
        return {name: getattr(self, name) for name in names if getattr(self, name) is not None}

    def evaluate(self, energy):
        """The spec with H replaced by the given energy (a number or a symbol)."""
        energy = sp.sympify(energy)
        values = {}
        for name in tuple(POLYNOMIAL_CAPS) + DERIVED_NAMES:
            value = getattr(self, name)
            values[name] = None if value is None else sp.expand(value.subs(H, energy))
        spec = replace(self, **{k: v for k, v in values.items() if k in POLYNOMIAL_CAPS})
        for name in DERIVED_NAMES:
            object.__setattr__(spec, name, values[name])
        object.__setattr__(spec, 'energy', energy)
        return spec

    def with_overrides(self, **overrides):
        derived = {k: sp.sympify(v) for k, v in overrides.items() if k in DERIVED_NAMES}
        base = {k: v for k, v in overrides.items() if k not in DERIVED_NAMES}
        spec = replace(self, **base)
        for name, value in derived.items():
            object.__setattr__(spec, name, value)
        return spec

    def to_dict(self):
        data = {'mode': self.mode}
        for name in SCALAR_NAMES:
            data[name] = str(getattr(self, name))
        for name in POLYNOMIAL_CAPS:
            data[name] = [str(c) for c in ascending_coefficients(getattr(self, name))]
        if self.is_closed:
            data['derived'] = {name: str(getattr(self, name)) for name in DERIVED_NAMES}
        return data

    def __repr__(self):
        return f'<AlgebraSpec {self.mode} closed={self.is_closed}>'


COEFFICIENT_NAMES = tuple(f'c{i}' for i in range(1, 12))


@dataclass(frozen=True)
class CasimirCoefficients:
    """The eleven coefficients of K = C^2 + c1{A^3,B} + ... + c11 A."""
    c1: sp.Expr
    c2: sp.Expr
    c3: sp.Expr
    c4: sp.Expr
    c5: sp.Expr
    c6: sp.Expr
    c7: sp.Expr
    c8: sp.Expr
    c9: sp.Expr
    c10: sp.Expr
    c11: sp.Expr

    @classmethod
    def from_sequence(cls, values):
        values = list(values)
        if len(values) != 11:
            raise ValueError(f"Expected 11 Casimir coefficients, got {len(values)}")
        return cls(*values)

    def as_tuple(self):
        return tuple(getattr(self, f.name) for f in fields(self))

    def evaluate(self, energy):
        energy = sp.sympify(energy)
        return CasimirCoefficients(*(sp.expand(sp.sympify(c).subs(H, energy)) for c in self.as_tuple()))

    def as_floats(self):
        return [float(c) for c in self.as_tuple()]

    def to_dict(self):
        return {name: str(value) for name, value in zip(COEFFICIENT_NAMES, self.as_tuple())}


@dataclass(frozen=True)
class ReductionReport:
    """Which quartic-only structures survive in the cubic, quadratic and QR(3) limits."""
    cubic: dict
    quadratic: dict
    qr3: dict
    phi_degrees: dict

    @property
    def passed(self):
        return all(all(section.values()) for section in (self.cubic, self.quadratic, self.qr3))

    def to_dict(self):
        return {
            'cubic': self.cubic,
            'quadratic': self.quadratic,
            'qr3': self.qr3,
            'phi_degrees': self.phi_degrees,
            'passed': self.passed
        }
