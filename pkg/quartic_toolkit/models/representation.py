from dataclasses import dataclass, field

import numpy as np
import sympy as sp


@dataclass(frozen=True)
class RepresentationCandidate:
    """An (E, u) pair with Phi(0) = Phi(p+1) = 0, isolated exactly."""
    p: int
    energy: object
    offset: object
    lattice_positive: bool
    interval_positive: object = None

    @property
    def dim(self):
        return self.p + 1

    @property
    def is_exact(self):
        return self.energy.is_exact and self.offset.is_exact

    @property
    def energy_value(self):
        return self.energy.value

    @property
    def offset_value(self):
        return self.offset.value

    def csv_row(self):
        return {
            'p': self.p,
            'E': _format_root(self.energy),
            'u': _format_root(self.offset),
            'dim': self.dim,
            'lattice_positive': self.lattice_positive,
            'interval_positive': '' if self.interval_positive is None else self.interval_positive
        }

    def to_dict(self):
        return {
            'p': self.p,
            'dim': self.dim,
            'energy': self.energy.to_dict(),
            'offset': self.offset.to_dict(),
            'lattice_positive': self.lattice_positive,
            'interval_positive': self.interval_positive
        }

    def __repr__(self):
        return f'<RepresentationCandidate p={self.p} E={_format_root(self.energy)} u={_format_root(self.offset)}>'


def _format_root(root):
    if root.is_exact:
        return str(root.lower)
    return f'{float(root.midpoint):.15g}'


@dataclass(frozen=True)
class DegenerateFamily:
    """A common factor of Phi(0) and Phi(p+1): a curve of (E, u) solutions, not solved."""
    p: int
    factor: sp.Expr
    reason: str

    def to_dict(self):
        return {'p': self.p, 'factor': str(self.factor), 'reason': self.reason}


@dataclass(frozen=True)
class FockRep:
    """Matrices of N, A, B, C on a (p+1)-dimensional Fock space or on an interior window."""
    p: int
    energy: float
    offset: float
    mat_n: np.ndarray = field(repr=False)
    mat_a: np.ndarray = field(repr=False)
    mat_b: np.ndarray = field(repr=False)
    mat_c: np.ndarray = field(repr=False)
    casimir_value: float
    case: str = None
    fock_norms: tuple = ()
    phi_values: tuple = ()
    margin: int = 0
    energy_exact: object = None

    @property
    def dim(self):
        return self.mat_a.shape[0]

    def to_dict(self):
        return {
            'p': self.p,
            'dim': self.dim,
            'energy': self.energy,
            'offset': self.offset,
            'casimir_value': self.casimir_value,
            'case': self.case,
            'phi_values': [str(v) for v in self.phi_values],
            'margin': self.margin
        }


@dataclass(frozen=True)
class VerificationReport:
    """Per-check maximum relative residuals ||L - R|| / (1 + ||R||) with a pass flag."""
    residuals: dict
    tol: float
    title: str = 'verification'

    @property
    def failures(self):
        return [name for name, value in self.residuals.items() if not value < self.tol]

    @property
    def passed(self):
        return not self.failures

    @property
    def max_residual(self):
        return max(self.residuals.values(), default=0.0)

    def merged(self, other, title=None):
        residuals = dict(self.residuals)
        residuals.update(other.residuals)
        return VerificationReport(residuals, min(self.tol, other.tol), title or self.title)

    def rows(self):
        return [
            {'check': name, 'residual': value, 'passed': value < self.tol}
            for name, value in self.residuals.items()
        ]

    def to_dict(self):
        return {
            'title': self.title,
            'tol': self.tol,
            'passed': self.passed,
            'max_residual': self.max_residual,
            'failures': self.failures,
            'residuals': dict(self.residuals)
        }


@dataclass(frozen=True)
class CasimirFit:
    """Least-squares estimate of c1..c11 and the Casimir scalar."""
    coefficients: object
    casimir_value: float
    rank: int
    residual: float

    def to_dict(self):
        data = {name: value for name, value in zip(
            (f'c{i}' for i in range(1, 12)), self.coefficients.as_tuple())}
        data.update({'casimir_value': self.casimir_value, 'rank': self.rank, 'residual': self.residual})
        return data
