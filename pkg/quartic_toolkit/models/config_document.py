from dataclasses import dataclass, field

import sympy as sp

from models.algebra import POLYNOMIAL_CAPS, SCALAR_NAMES, AlgebraSpec, ascending_coefficients
from services.ratcore import rational_string

# JSON spelling of scalar structure constants
JSON_SCALARS = {'tau': 'tau', 'lam': 'lambda', 'beta': 'beta'}


@dataclass(frozen=True)
class ConfigDocument:
    """A run configuration: structure constants, optional K(H) and solver settings."""
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
    casimir_of_h: sp.Expr = None
    l: sp.Expr = None
    p_max: int = None
    energy_window: tuple = None
    tol: float = None
    root_width: float = None
    notes: tuple = field(default_factory=tuple)

    def to_spec(self):
        values = {name: getattr(self, name) for name in SCALAR_NAMES + tuple(POLYNOMIAL_CAPS)}
        return AlgebraSpec(mode=self.mode, **values)

    def to_dict(self):
        """JSON-ready form; every rational is a string."""
        data = {'mode': self.mode}
        for name, key in JSON_SCALARS.items():
            data[key] = str(getattr(self, name))
        for name in POLYNOMIAL_CAPS:
            data[name] = [str(c) for c in ascending_coefficients(getattr(self, name))]
        if self.casimir_of_h is not None:
            data['casimir_of_h'] = [str(c) for c in ascending_coefficients(self.casimir_of_h)]
        if self.l is not None:
            data['l'] = str(self.l)
        if self.p_max is not None:
            data['p_max'] = self.p_max
        if self.energy_window is not None:
            data['energy_window'] = [rational_string(v) for v in self.energy_window]
        if self.tol is not None:
            data['tol'] = self.tol
        if self.root_width is not None:
            data['root_width'] = self.root_width
        if self.notes:
            data['notes'] = list(self.notes)
        return data

    def __repr__(self):
        return f'<ConfigDocument {self.mode} l={self.l}>'
