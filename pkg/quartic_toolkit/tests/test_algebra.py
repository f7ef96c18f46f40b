import numpy as np
import pytest
import sympy as sp

from models.algebra import H, AlgebraSpec, CasimirCoefficients
from services.algebra import (casimir_coefficients, casimir_in_h, casimir_terms, close_jacobi,
                              evaluate_casimir_matrix, perturbed, reduction_check)
from utils.errors import ConfigError, QuarticError


def _spec(mode):
    return AlgebraSpec.build(mode=mode, tau=2, beta=4, delta=[6], alpha=[1], gamma=[5])


def test_close_jacobi_quantum():
    closed = close_jacobi(_spec('quantum'))
    assert (closed.omega, closed.sigma, closed.rho_sc, closed.eta) == (-3, 3, -4, 1)


def test_close_jacobi_classical():
    closed = close_jacobi(_spec('classical'))
    assert (closed.omega, closed.sigma, closed.rho_sc, closed.eta) == (-3, -1, -4, -5)


def test_close_jacobi_is_idempotent(case2_spec):
    assert close_jacobi(case2_spec) == case2_spec


def test_quantum_casimir_coefficients_example():
    spec = close_jacobi(AlgebraSpec.build(tau=2, beta=1))
    assert casimir_coefficients(spec).as_tuple() == (-2, 3, -1, -1, 1, 0, 0, 9, -6, 1, 0)


def test_quantum_casimir_coefficients_with_lambda():
    spec = close_jacobi(AlgebraSpec.build(beta=1, delta=[1], lam=1))
    R = sp.Rational
    assert casimir_coefficients(spec).as_tuple() == (0, 0, -1, 0, 0, 0, R(2, 5), 1, R(2, 15), -R(1, 3), R(1, 15))


def test_classical_casimir_coefficients():
    spec = close_jacobi(AlgebraSpec.build(mode='classical', tau=1, lam=5, beta=2, alpha=[3],
                                          gamma=[4], delta=[6], epsilon=[7], mu=[8], nu=[9],
                                          xi=[10], zeta=[11]))
    assert casimir_coefficients(spec).as_tuple() == (-1, -3, -2, -4, -6, -14, 2, 4, 6, 10, 22)


def test_casimir_coefficients_need_closed_spec():
    with pytest.raises(QuarticError):
        casimir_coefficients(AlgebraSpec.build(tau=1))


def test_coefficients_keep_energy_dependence():
    spec = close_jacobi(AlgebraSpec.build(delta=[0, 1], zeta=[0, 0, 1]))
    coefficients = casimir_coefficients(spec)
    assert coefficients.c5 == -H
    assert sp.expand(coefficients.c11 - 2 * H**2) == 0
    assert coefficients.evaluate(3).c5 == -3


def test_degree_caps_are_enforced():
    with pytest.raises(ConfigError):
        AlgebraSpec.build(delta=[0, 0, 1])
    with pytest.raises(ConfigError):
        AlgebraSpec(tau=H)


def test_unknown_constant_is_rejected():
    with pytest.raises(ConfigError):
        AlgebraSpec.build(kappa=1)


def test_unknown_mode_is_rejected():
    with pytest.raises(ConfigError):
        AlgebraSpec(mode='semiclassical')


def test_evaluate_substitutes_energy(case1_spec):
    spec = close_jacobi(case1_spec.with_overrides(mu=1 + H))
    evaluated = spec.evaluate(2)
    assert evaluated.mu == 3
    assert evaluated.energy == 2
    assert evaluated.is_closed


def test_reduction_check_passes_for_generic_spec(case1_spec):
    report = reduction_check(case1_spec)
    assert report.passed
    assert report.phi_degrees['quartic'] == 6
    assert report.phi_degrees['cubic'] == 4


def test_quadratic_limit_degree_depends_on_alpha():
    spec = close_jacobi(AlgebraSpec.build(delta=[1], alpha=[0], gamma=[1], epsilon=[1], nu=[1], xi=[1], zeta=[1]))
    assert reduction_check(spec).phi_degrees['quadratic'] <= 3


def test_reduction_check_detects_wrong_limit_coefficients(case1_spec):
    def misprinted(spec):
        values = list(casimir_coefficients(spec).as_tuple())
        values[7] = values[7] + spec.mu / 2
        return CasimirCoefficients.from_sequence(values)

    report = reduction_check(case1_spec, coefficients=misprinted)
    assert not report.passed
    assert not report.cubic['casimir_is_cubic_form']
    assert report.quadratic['casimir_is_cubic_form']


def test_reduction_check_classical():
    spec = close_jacobi(AlgebraSpec.build(mode='classical', tau=1, lam=3, beta=2, alpha=[1], mu=[2], nu=[1]))
    report = reduction_check(spec)
    assert report.passed
    assert report.phi_degrees == {}


def test_casimir_in_h_rejects_high_degree(case1_spec):
    assert casimir_in_h(case1_spec, ['1', '0', '2']) == 1 + 2 * H**2
    with pytest.raises(QuarticError):
        casimir_in_h(case1_spec, [0, 0, 0, 0, 0, 0, 1])


def test_casimir_terms_order(rng):
    a = np.diag(rng.normal(size=4))
    b = rng.normal(size=(4, 4))
    terms = casimir_terms(a, b)
    assert len(terms) == 11
    np.testing.assert_allclose(terms[3], a @ b + b @ a)
    np.testing.assert_allclose(terms[10], a)


def test_evaluate_casimir_matrix_with_zero_coefficients(rng):
    a = np.diag(rng.normal(size=3))
    b = rng.normal(size=(3, 3))
    c = a @ b - b @ a
    zero = CasimirCoefficients.from_sequence([0] * 11)
    np.testing.assert_allclose(evaluate_casimir_matrix(zero, a, b, c), c @ c)


def test_perturbed_shifts_one_constant(case2_spec):
    shifted = perturbed(case2_spec, 'sigma', sp.Rational(1, 10))
    assert shifted.sigma == case2_spec.sigma + sp.Rational(1, 10)
    assert shifted.omega == case2_spec.omega
