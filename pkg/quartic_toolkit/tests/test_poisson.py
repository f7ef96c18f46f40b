import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from models.algebra import H, AlgebraSpec
from services.algebra import casimir_coefficients, close_jacobi, perturbed
from services.poisson import A, B, C, bracket, casimir_function, generator_brackets, jacobi_residual, solve_casimir
from utils.errors import QuarticError


@pytest.fixture(scope='module')
def classical_spec():
    return close_jacobi(AlgebraSpec.build(
        mode='classical', tau=1, lam=2, beta=3, alpha=[1, 1], gamma=[2], delta=[1, 2],
        epsilon=['1/2'], mu=[1], nu=[0, 1], xi=[3], zeta=[1, 0, 1]))


monomials = st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 1), st.integers(-3, 3))
phase_polys = st.lists(monomials, min_size=1, max_size=3).map(
    lambda terms: sum(c * A**i * B**j * C**k for i, j, k, c in terms))


def test_generator_brackets(classical_spec):
    table = generator_brackets(classical_spec)
    assert table[(A, B)] == C
    assert bracket(A, B, classical_spec) == C
    assert bracket(B, A, classical_spec) == -C
    assert bracket(A, C, classical_spec) == table[(A, C)]


def test_bracket_with_energy_vanishes(classical_spec):
    assert bracket(H, A**2 * B, classical_spec) == 0


@given(phase_polys, phase_polys)
@settings(max_examples=25, deadline=None)
def test_antisymmetry(p, q):
    spec = close_jacobi(AlgebraSpec.build(mode='classical', tau=1, beta=2, delta=[1], zeta=[1]))
    assert sp.expand(bracket(p, q, spec) + bracket(q, p, spec)) == 0


@given(phase_polys, phase_polys, phase_polys)
@settings(max_examples=20, deadline=None)
def test_leibniz_rule(p, q, r):
    spec = close_jacobi(AlgebraSpec.build(mode='classical', alpha=[1], gamma=[2], nu=[1]))
    left = bracket(p, q * r, spec)
    right = bracket(p, q, spec) * r + q * bracket(p, r, spec)
    assert sp.expand(left - right) == 0


def test_jacobi_residual_vanishes_when_closed(classical_spec):
    assert jacobi_residual(classical_spec) == 0


@given(phase_polys, phase_polys, phase_polys)
@settings(max_examples=15, deadline=None)
def test_jacobi_identity_on_triples(p, q, r):
    spec = close_jacobi(AlgebraSpec.build(mode='classical', tau=1, beta=1, alpha=[1], delta=[2]))
    cyclic = (bracket(p, bracket(q, r, spec), spec) + bracket(q, bracket(r, p, spec), spec)
              + bracket(r, bracket(p, q, spec), spec))
    assert sp.expand(cyclic) == 0


@pytest.mark.parametrize('name', ['omega', 'sigma', 'rho_sc', 'eta'])
def test_jacobi_residual_detects_perturbation(classical_spec, name):
    assert jacobi_residual(perturbed(classical_spec, name, sp.Rational(1, 10))) != 0


def test_solve_casimir_matches_closed_form(classical_spec):
    solved = solve_casimir(classical_spec)
    expected = casimir_coefficients(classical_spec)
    for got, want in zip(solved.as_tuple(), expected.as_tuple()):
        assert sp.expand(got - want) == 0


def test_closed_form_casimir_commutes(classical_spec):
    k = casimir_function(casimir_coefficients(classical_spec))
    assert bracket(k, A, classical_spec) == 0
    assert bracket(k, B, classical_spec) == 0


def test_quantum_spec_is_rejected():
    spec = close_jacobi(AlgebraSpec.build(tau=1))
    with pytest.raises(QuarticError):
        bracket(A, B, spec)


rationals = st.fractions(min_value=-4, max_value=4, max_denominator=5).map(sp.Rational)
classical_specs = st.fixed_dictionaries({
    name: rationals for name in ('tau', 'lam', 'beta', 'alpha', 'gamma', 'delta', 'epsilon',
                                 'mu', 'nu', 'xi', 'zeta')
}).map(lambda values: close_jacobi(AlgebraSpec.build(
    mode='classical', **{k: (v if k in ('tau', 'lam', 'beta') else [v]) for k, v in values.items()})))


@given(classical_specs)
@settings(max_examples=50, deadline=None)
def test_solve_casimir_agrees_on_random_specs(spec):
    solved = solve_casimir(spec)
    for got, want in zip(solved.as_tuple(), casimir_coefficients(spec).as_tuple()):
        assert sp.expand(got - want) == 0


@given(classical_specs, st.sampled_from(['omega', 'sigma', 'rho_sc', 'eta']),
       rationals.filter(lambda v: v != 0))
@settings(max_examples=20, deadline=None)
def test_jacobi_residual_detects_random_perturbations(spec, name, amount):
    assert jacobi_residual(spec) == 0
    assert jacobi_residual(perturbed(spec, name, amount)) != 0
