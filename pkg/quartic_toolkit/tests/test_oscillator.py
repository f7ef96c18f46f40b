import pytest
import sympy as sp

from models.algebra import H, AlgebraSpec
from models.realization import CASE1, CASE2, UNSUPPORTED, E, K, N, t, u
from services.algebra import close_jacobi
from services.example import factored_structure_function, generate_example, offset_roots
from services.oscillator import (case2_table_discrepancies, detect_case, fock_norm, fock_pair, phi_closed,
                                 phi_oracle, realization_checks, realize)
from utils.errors import NonUnitaryError, QuarticError, SingularSystemError, UnsupportedCaseError


def test_detect_case(case1_spec, case2_spec):
    assert detect_case(case1_spec) == CASE1
    assert detect_case(case2_spec) == CASE2
    assert detect_case(close_jacobi(AlgebraSpec.build(tau=1))) == UNSUPPORTED


def test_case1_realization_is_verified(case1_spec):
    realization = realize(case1_spec)
    assert realization.case == CASE1
    assert realization.verified, realization.checks
    assert realization.sqrt_delta == 2
    assert realization.rho2(3) == sp.Rational(1, 2)


def test_case2_realization_is_verified(case2_spec):
    realization = realize(case2_spec)
    assert realization.case == CASE2
    assert realization.verified, realization.checks
    assert realization.b_denominator == '1/4'


def test_realization_checks_fail_for_wrong_b(case1_spec):
    a = 2 * (N + u)
    checks = realization_checks(case1_spec, a, a**2)
    assert not checks['diagonal_relation']
    assert checks['difference_square']


def test_unsupported_case_is_refused():
    with pytest.raises(UnsupportedCaseError):
        realize(close_jacobi(AlgebraSpec.build(tau=1, zeta=[1])))


def test_negative_delta_is_not_unitary():
    with pytest.raises(NonUnitaryError):
        realize(close_jacobi(AlgebraSpec.build(delta=[-4])))


def test_classical_spec_has_no_realization():
    with pytest.raises(QuarticError):
        realize(close_jacobi(AlgebraSpec.build(mode='classical', delta=[1])))


def test_trivial_structure_function():
    spec = close_jacobi(AlgebraSpec.build(delta=[1]))
    structure = phi_closed(spec, -2)
    assert structure.degree == 0
    assert structure.at(5) == 1


def test_case1_degree_is_six(case1_spec):
    assert phi_closed(case1_spec, K).degree == 6


@pytest.mark.parametrize('n', [1, 2, 3])
def test_case1_closed_form_matches_oracle(case1_spec, n):
    offset = sp.Rational(1, 3)
    closed = phi_closed(case1_spec, 7, offset)
    assert sp.simplify(closed.at(n) - phi_oracle(case1_spec, 7, offset, n)) == 0


@pytest.mark.parametrize('n', [1, 2])
def test_case2_closed_form_matches_oracle(case2_spec, n):
    offset = sp.Rational(1, 5)
    closed = phi_closed(case2_spec, 3, offset)
    assert sp.simplify(closed.at(n) - phi_oracle(case2_spec, 3, offset, n)) == 0


def test_case2_structure_function_degree(case2_spec):
    assert phi_closed(case2_spec, K).degree <= 12


def test_case2_table_agrees_for_epsilon_only():
    spec = close_jacobi(AlgebraSpec.build(beta=2, epsilon=[3]))
    assert case2_table_discrepancies(spec, K) == ()


def test_oracle_refuses_rho_pole(case2_spec):
    with pytest.raises(SingularSystemError):
        phi_oracle(case2_spec, 3, 0, 1)


def test_fock_norm_is_phi_times_rho2(case1_spec):
    offset = sp.Rational(1, 3)
    phi = phi_oracle(case1_spec, 7, offset, 2)
    assert sp.simplify(fock_norm(case1_spec, 7, offset, 2) - phi / 2) == 0


def test_example_structure_function_factors(example_config):
    document = example_config(1)
    spec = close_jacobi(document.to_spec()).evaluate(E)
    structure = phi_closed(spec, document.casimir_of_h.subs(H, E))
    expected = sp.Poly(factored_structure_function(1, E, t), t)
    assert sp.expand(structure.in_shifted(u).as_expr() - expected.as_expr()) == 0
    assert structure.degree == 5


def test_example_lattice_values(example_config):
    """Phi at p = 1, l = 1 on the ladder: E = 9/2, u = -3/8"""
    document = example_config(1)
    spec = close_jacobi(document.to_spec()).evaluate(sp.Rational(9, 2))
    casimir = document.casimir_of_h.subs(H, sp.Rational(9, 2))
    structure = phi_closed(spec, casimir, sp.Rational(-3, 8))
    assert structure.at(0) == 0
    assert structure.at(1) == 210
    assert structure.at(2) == 0
    assert sp.simplify(phi_oracle(spec, casimir, sp.Rational(-3, 8), 1) - 210) == 0


def test_example_offsets_at_ladder_energy():
    roots = offset_roots(1, sp.Rational(9, 2))
    assert sp.Rational(-3, 8) in roots
    assert len(roots) == 5


@pytest.mark.parametrize('seed', range(30))
@pytest.mark.parametrize('case', ['case1', 'case2'])
def test_closed_form_matches_oracle_on_random_specs(random_quantum_spec, seed, case):
    spec, casimir, offset = random_quantum_spec(seed, case)
    realization = realize(spec)
    closed = phi_closed(spec, casimir, offset)
    for n in range(13):
        oracle = phi_oracle(spec, casimir, offset, n, realization=realization)
        assert sp.simplify(closed.at(n) - oracle) == 0, (seed, n)


@pytest.mark.parametrize('spec_name, casimir, offset', [
    ('case1_spec', 7, sp.Rational(1, 3)),
    ('case2_spec', 3, sp.Rational(1, 5)),
])
def test_fock_pairs_agree_on_shared_site(request, spec_name, casimir, offset):
    spec = request.getfixturevalue(spec_name)
    realization = realize(spec)
    for n in range(1, 5):
        _, y_next = fock_pair(realization, casimir, offset, n)
        y_here, _ = fock_pair(realization, casimir, offset, n + 1)
        assert sp.simplify(y_next - y_here) == 0


def test_example_factors_for_symbolic_l():
    """Five linear factors in t for every l, with roots at the offsets u1..u5"""
    l = sp.Symbol('l', nonnegative=True)  # noqa: E741
    document = generate_example(l, p_max=0)
    spec = close_jacobi(document.to_spec()).evaluate(E)
    structure = phi_closed(spec, document.casimir_of_h.subs(H, E))
    in_t = structure.in_shifted(u).as_expr()
    assert sp.expand(in_t - factored_structure_function(l, E, t)) == 0

    roots = sp.roots(sp.Poly(in_t, t))
    expected = {(E + 2) / 4, (1 - E + 2 * l) / 4, (3 - E - 2 * l) / 4,
                -(1 + E + 2 * l) / 4, -(5 + E + 2 * l) / 4}
    assert {sp.expand(r) for r in roots} == {sp.expand(r) for r in expected}
