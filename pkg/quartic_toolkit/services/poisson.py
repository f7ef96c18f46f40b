"""
Symbolic Poisson-bracket oracle for classical quartic algebras.

Phase-space functions are sympy polynomials in the generators A, B, C whose
coefficients live in Q[H] (and in any symbolic structure constants).
"""
import logging

import sympy as sp
from sympy.polys.matrices import DomainMatrix

from models.algebra import CasimirCoefficients
from utils.errors import QuarticError, SingularSystemError

logger = logging.getLogger(__name__)

A, B, C = sp.symbols('A B C')
GENERATORS = (A, B, C)
CASIMIR_UNKNOWNS = sp.symbols('c1:12')


def _require_classical(spec):
    if spec.is_quantum:
        raise QuarticError("Poisson brackets need a classical spec; use matrix checks for quantum specs")
    if not spec.is_closed:
        raise QuarticError("Poisson brackets need omega, sigma, rho_sc and eta; call close_jacobi first")


def generator_brackets(spec):
    """Right-hand sides of {A,B}, {A,C} and {B,C}."""
    _require_classical(spec)
    x = (spec.tau * A**3 + spec.alpha * A**2 + 2 * spec.beta * A * B
         + spec.gamma * A + spec.delta * B + spec.epsilon)
    y = (spec.lam * A**4 + spec.mu * A**3 + spec.nu * A**2 + spec.xi * A
         + spec.rho_sc * B**2 + spec.eta * B + 2 * spec.omega * A**2 * B
         + 2 * spec.sigma * A * B + spec.zeta)
    return {(A, B): C, (A, C): sp.expand(x), (B, C): sp.expand(y)}


def bracket(p, q, spec):
    """{p, q} extended from the generator brackets by bilinearity and the Leibniz rule."""
    table = generator_brackets(spec)
    p, q = sp.sympify(p), sp.sympify(q)
    result = sp.Integer(0)
    for (x, y), value in table.items():
        result += (sp.diff(p, x) * sp.diff(q, y) - sp.diff(p, y) * sp.diff(q, x)) * value
    return sp.expand(result)


def jacobi_residual(spec):
    """{A,{B,C}} - {B,{A,C}}; zero exactly when the Jacobi closure holds."""
    table = generator_brackets(spec)
    return sp.expand(bracket(A, table[(B, C)], spec) - bracket(B, table[(A, C)], spec))


def casimir_ansatz(coefficients=CASIMIR_UNKNOWNS):
    c1, c2, c3, c4, c5, c6, c7, c8, c9, c10, c11 = coefficients
    return (C**2 + 2 * c1 * A**3 * B + 2 * c2 * A**2 * B + 2 * c3 * A * B**2 + 2 * c4 * A * B
            + c5 * B**2 + c6 * B + c7 * A**5 + c8 * A**4 + c9 * A**3 + c10 * A**2 + c11 * A)


def _coefficient_equations(expr):
    if expr == 0:
        return []
    return sp.Poly(expr, *GENERATORS).coeffs()


def solve_casimir(spec):
    """
    Solve {K,A} = {K,B} = 0 for c1..c11 by fraction-free elimination.

    Raises SingularSystemError when the system is inconsistent or rank deficient.
    """
    ansatz = casimir_ansatz()
    equations = _coefficient_equations(bracket(ansatz, A, spec)) + \
        _coefficient_equations(bracket(ansatz, B, spec))
    matrix, rhs = sp.linear_eq_to_matrix(equations, CASIMIR_UNKNOWNS)
    augmented = DomainMatrix.from_Matrix(matrix.row_join(rhs)).to_field()
    reduced, pivots = augmented.rref()
    unknowns = len(CASIMIR_UNKNOWNS)
    logger.debug(f"Casimir system: {len(equations)} equations, pivots {pivots}")

    if unknowns in pivots:
        raise SingularSystemError("Casimir system is inconsistent; is the spec closed?",
                                  payload={'pivots': list(pivots)})
    if len(pivots) < unknowns:
        raise SingularSystemError(f"Casimir system has rank {len(pivots)} < {unknowns}",
                                  payload={'pivots': list(pivots)})

    solution = reduced.to_Matrix()
    values = [sp.Integer(0)] * unknowns
    for row, column in enumerate(pivots):
        values[column] = sp.factor_terms(sp.cancel(solution[row, unknowns]))
    return CasimirCoefficients(*(sp.expand(v) for v in values))


def casimir_function(coefficients):
    """K as a phase-space polynomial for given coefficients."""
    return sp.expand(casimir_ansatz(coefficients.as_tuple()))
