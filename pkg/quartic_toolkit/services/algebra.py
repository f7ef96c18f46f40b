"""
Jacobi closure and Casimir coefficients of quartic algebras.
"""
import logging

import sympy as sp

from models.algebra import H, CasimirCoefficients, ReductionReport, polynomial_in_h
from utils.errors import QuarticError

logger = logging.getLogger(__name__)

CASIMIR_DEGREE_IN_H = 5


def close_jacobi(spec):
    """Return the spec with omega, sigma, rho_sc and eta fixed by the Jacobi identity."""
    omega = -sp.Rational(3, 2) * spec.tau
    rho_sc = -spec.beta
    if spec.is_quantum:
        sigma = spec.beta * spec.tau / 2 - spec.alpha
        eta = -spec.gamma + spec.delta * spec.tau / 2
    else:
        sigma = -spec.alpha
        eta = -spec.gamma
    closed = spec.with_overrides(
        omega=sp.expand(omega),
        sigma=sp.expand(sigma),
        rho_sc=sp.expand(rho_sc),
        eta=sp.expand(eta)
    )
    logger.debug(f"Closed {spec.mode} spec: omega={closed.omega}, sigma={closed.sigma}, "
                 f"rho_sc={closed.rho_sc}, eta={closed.eta}")
    return closed


def _require_closed(spec):
    if not spec.is_closed:
        raise QuarticError("Structure constants are not closed under the Jacobi identity; "
                           "call close_jacobi first")


def casimir_coefficients(spec):
    """Closed-form c1..c11 of K = C^2 + c1{A^3,B} + c2{A^2,B} + ... + c11 A."""
    _require_closed(spec)
    tau, lam, beta = spec.tau, spec.lam, spec.beta
    alpha, gamma, delta, epsilon = spec.alpha, spec.gamma, spec.delta, spec.epsilon
    mu, nu, xi, zeta = spec.mu, spec.nu, spec.xi, spec.zeta
    R = sp.Rational

    if not spec.is_quantum:
        values = (
            -tau, -alpha, -beta, -gamma, -delta, -2 * epsilon,
            R(2, 5) * lam, mu / 2, R(2, 3) * nu, xi, 2 * zeta
        )
        return CasimirCoefficients(*(sp.expand(v) for v in values))

    c1 = -tau
    c2 = -alpha + R(3, 2) * beta * tau
    c3 = -beta
    c4 = -gamma + beta * (alpha - beta * tau / 2)
    c5 = beta**2 - delta
    c6 = -2 * epsilon + beta * gamma - beta * delta * tau / 2
    c7 = R(2, 5) * lam
    # c8..c11 make the diagonal of K constant along the realization lattice
    c8 = beta * lam + mu / 2 + R(9, 4) * tau**2
    c9 = ((-R(8, 15) * beta**2 + R(2, 3) * delta) * lam + R(2, 3) * beta * mu + R(2, 3) * nu
          + 3 * alpha * tau - R(3, 2) * beta * tau**2)
    c10 = (alpha**2 + (R(2, 15) * beta**3 - R(7, 15) * beta * delta) * lam - beta**2 * mu / 6
           + delta * mu / 2 + beta * nu / 3 + xi + (-alpha * beta + R(3, 2) * gamma) * tau
           + (beta**2 - 3 * delta) * tau**2 / 4)
    c11 = (alpha * gamma + 2 * zeta + (R(2, 15) * beta**2 * delta - delta**2 / 15) * lam
           - beta * delta * mu / 6 + delta * nu / 3 + (-beta * gamma / 2 - alpha * delta / 2) * tau
           + beta * delta * tau**2 / 4)
    return CasimirCoefficients(*(sp.expand(v) for v in (c1, c2, c3, c4, c5, c6, c7, c8, c9, c10, c11)))


def _is_zero(expr):
    return sp.simplify(expr) == 0


def _cubic_casimir(spec):
    """c1..c11 of the cubic algebra (tau = lam = 0), written out independently of the quartic forms."""
    alpha, beta, gamma, delta, epsilon = spec.alpha, spec.beta, spec.gamma, spec.delta, spec.epsilon
    mu, nu, xi, zeta = spec.mu, spec.nu, spec.xi, spec.zeta
    R = sp.Rational
    if not spec.is_quantum:
        return (0, -alpha, -beta, -gamma, -delta, -2 * epsilon, 0, mu / 2, R(2, 3) * nu, xi, 2 * zeta)
    return (
        0, -alpha, -beta, alpha * beta - gamma, beta**2 - delta, beta * gamma - 2 * epsilon, 0,
        mu / 2, R(2, 3) * (beta * mu + nu),
        alpha**2 + xi + delta * mu / 2 + beta * nu / 3 - beta**2 * mu / 6,
        alpha * gamma + 2 * zeta + delta * nu / 3 - beta * delta * mu / 6
    )


def _matches(derived, expected):
    return all(_is_zero(d - e) for d, e in zip(derived.as_tuple(), expected))


def reduction_check(spec, coefficients=casimir_coefficients):
    """
    Take the cubic (tau = lam = 0), quadratic (also mu = 0) and QR(3) (also nu = 0)
    limits of a spec and compare the reduced Casimir with the lower-degree forms.

    For Case 1 specs the structure-function degree must also drop from 6 to at
    most 4 and then 3.
    """
    cubic_spec = close_jacobi(spec.with_overrides(tau=0, lam=0))
    quadratic_spec = close_jacobi(cubic_spec.with_overrides(mu=0))
    qr3_spec = close_jacobi(quadratic_spec.with_overrides(nu=0))

    cubic_coeffs = coefficients(cubic_spec)
    quadratic_coeffs = coefficients(quadratic_spec)
    qr3_coeffs = coefficients(qr3_spec)

    cubic = {
        'casimir_is_cubic_form': _matches(cubic_coeffs, _cubic_casimir(cubic_spec)),
        'a4b_and_a5_terms_vanish': _is_zero(cubic_coeffs.c1) and _is_zero(cubic_coeffs.c7),
        'omega_vanishes': _is_zero(cubic_spec.omega),
    }
    quadratic = {
        'casimir_is_cubic_form': _matches(quadratic_coeffs, _cubic_casimir(quadratic_spec)),
        'a4_term_vanishes': _is_zero(quadratic_coeffs.c8),
    }
    qr3 = {
        'casimir_is_cubic_form': _matches(qr3_coeffs, _cubic_casimir(qr3_spec)),
        'a3_term_vanishes': _is_zero(qr3_coeffs.c9),
    }

    phi_degrees = {}
    if spec.is_quantum and spec.beta == 0 and sp.expand(spec.delta) != 0:
        from services.oscillator import limit_degrees
        phi_degrees = limit_degrees(spec)
        cubic['phi_degree_at_most_4'] = phi_degrees['cubic'] <= 4
        quadratic['phi_degree_at_most_3'] = phi_degrees['quadratic'] <= 3

    report = ReductionReport(cubic=cubic, quadratic=quadratic, qr3=qr3, phi_degrees=phi_degrees)
    if not report.passed:
        logger.warning(f"Limit reduction failed: {report.to_dict()}")
    return report


def casimir_in_h(spec, coefficients):
    """
    The Casimir value K(H) = k0 + k1 H + ... + k5 H^5 a representation family fixes.

    Accepts ascending coefficients or an H-expression.
    """
    _require_closed(spec)
    value = polynomial_in_h(coefficients)
    if H in value.free_symbols and sp.Poly(value, H).degree() > CASIMIR_DEGREE_IN_H:
        raise QuarticError(f"K(H) has degree above {CASIMIR_DEGREE_IN_H}: {value}")
    return sp.expand(value)


def anticommutator(x, y):
    return x @ y + y @ x


def commutator(x, y):
    return x @ y - y @ x


def relation_rhs(constants, mat_a, mat_b, identity):
    """Right-hand sides of [A, C] and [B, C] on generator matrices, numpy or sympy."""
    c = constants
    a2 = mat_a @ mat_a
    ac_rhs = (c['tau'] * a2 @ mat_a + c['alpha'] * a2 + c['beta'] * anticommutator(mat_a, mat_b)
              + c['gamma'] * mat_a + c['delta'] * mat_b + c['epsilon'] * identity)
    bc_rhs = (c['lam'] * a2 @ a2 + c['mu'] * a2 @ mat_a + c['nu'] * a2 + c['xi'] * mat_a
              + c['rho_sc'] * mat_b @ mat_b + c['eta'] * mat_b + c['omega'] * anticommutator(a2, mat_b)
              + c['sigma'] * anticommutator(mat_a, mat_b) + c['zeta'] * identity)
    return ac_rhs, bc_rhs


def casimir_terms(mat_a, mat_b):
    """The eleven operator terms multiplying c1..c11, on numpy or sympy matrices."""
    a2 = mat_a @ mat_a
    a3 = a2 @ mat_a
    a4 = a3 @ mat_a
    a5 = a4 @ mat_a
    b2 = mat_b @ mat_b
    return [
        anticommutator(a3, mat_b),
        anticommutator(a2, mat_b),
        anticommutator(mat_a, b2),
        anticommutator(mat_a, mat_b),
        b2,
        mat_b,
        a5,
        a4,
        a3,
        a2,
        mat_a,
    ]


def evaluate_casimir_matrix(coefficients, mat_a, mat_b, mat_c):
    """Assemble K = C^2 + sum c_i T_i from numeric coefficients and generator matrices."""
    values = coefficients.as_floats() if isinstance(coefficients, CasimirCoefficients) else list(coefficients)
    result = mat_c @ mat_c
    for value, term in zip(values, casimir_terms(mat_a, mat_b)):
        result = result + value * term
    return result


def perturbed(spec, name, amount):
    """A closed spec with one derived constant shifted, for negative controls."""
    _require_closed(spec)
    return spec.with_overrides(**{name: getattr(spec, name) + amount})

