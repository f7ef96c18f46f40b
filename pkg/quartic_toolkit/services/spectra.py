"""
Finite-dimensional unitary representations: constraint solving, matrix
construction and numerical verification of the algebra and its operator
identities.
"""
import logging

import numpy as np
import sympy as sp
from sympy.polys.polyerrors import CoercionFailed, PolynomialError

from models.algebra import H, CasimirCoefficients
from models.realization import E, N, u
from models.representation import (CasimirFit, DegenerateFamily, FockRep,
                                   RepresentationCandidate, VerificationReport)
from services.algebra import (anticommutator, casimir_coefficients, casimir_terms, close_jacobi,
                              commutator, evaluate_casimir_matrix, relation_rhs)
from services.oscillator import phi_closed, realize
from services.ratcore import RealRoot, count_roots, poly_gcd, rational_roots, real_roots, resultant
from utils.errors import NonUnitaryError, QuarticError, SingularSystemError, UnsupportedCaseError

logger = logging.getLogger(__name__)

PRECISION = 50
PAIRING_TOL = 1e-6
MIN_FIT_DIM = 7
WINDOW_MARGIN = 3


def _to_float(value):
    return float(sp.N(value, PRECISION))


def _phi_in_eu(spec, k_of_h):
    """Phi(N) with the structure constants at H = E, as a polynomial in N over Q[E, u]."""
    spec = spec if spec.is_closed else close_jacobi(spec)
    spec_e = spec.evaluate(E)
    casimir = sp.expand(sp.sympify(k_of_h).subs(H, E))
    realization = realize(spec_e)
    structure = phi_closed(spec_e, casimir)
    try:
        sp.Poly(structure.phi.as_expr(), N, E, u, domain=sp.QQ)
    except (PolynomialError, CoercionFailed) as exc:
        raise UnsupportedCaseError(
            "Constraint solving needs Phi polynomial in E and u with rational coefficients") from exc
    return spec_e, realization, structure


def _phi_at(structure, n):
    return sp.Poly(sp.expand(structure.phi.as_expr().subs(N, n)), E, u, domain=sp.QQ)


def _split_common_factor(phi_low, phi_high, p, families):
    common = poly_gcd(phi_low, phi_high)
    if common.total_degree() > 0:
        factor = common.as_expr()
        families.append(DegenerateFamily(p=p, factor=sp.factor(factor),
                                         reason='common factor of Phi(0) and Phi(p+1)'))
        logger.warning(f"p={p}: degenerate family {sp.factor(factor)} = 0 split off")
        phi_low = sp.Poly(sp.quo(phi_low, common), E, u, domain=sp.QQ)
        phi_high = sp.Poly(sp.quo(phi_high, common), E, u, domain=sp.QQ)
    return phi_low, phi_high


def _isolate(poly, window, width):
    """Exact rational roots first, then Sturm intervals for the rest, inside the window."""
    low, high = window
    roots = []
    remaining = poly
    for value, multiplicity in rational_roots(poly):
        remaining = sp.Poly(sp.quo(remaining, sp.Poly((poly.gen - value)**multiplicity, poly.gen)),
                            poly.gen, domain=sp.QQ)
        if low <= value <= high:
            roots.append(RealRoot(value, value, multiplicity))
    if remaining.degree() > 0:
        for root in real_roots(remaining, interval=(low, high), width=width):
            if not root.is_exact or all(r.lower != root.lower for r in roots):
                roots.append(root)
    roots.sort(key=lambda r: r.lower)
    return roots


def _offsets_for_exact_energy(phi_low, phi_high, energy, width, p, families):
    low_u = sp.Poly(phi_low.as_expr().subs(E, energy), u, domain=sp.QQ)
    high_u = sp.Poly(phi_high.as_expr().subs(E, energy), u, domain=sp.QQ)
    if low_u.is_zero and high_u.is_zero:
        families.append(DegenerateFamily(p=p, factor=E - energy,
                                         reason='Phi(0) and Phi(p+1) vanish for every u'))
        return []
    if low_u.is_zero:
        common = high_u
    elif high_u.is_zero:
        common = low_u
    else:
        common = sp.Poly(poly_gcd(low_u, high_u), u, domain=sp.QQ)
    if common.degree() < 1:
        return []
    bound = 1 + max((abs(c) for c in common.all_coeffs()[1:]), default=0) / abs(common.LC())
    return _isolate(common, (-bound, bound), width)


def _offsets_for_interval_energy(phi_low, phi_high, energy, width):
    eliminated = resultant(phi_low, phi_high, E)
    eliminated = sp.Poly(eliminated.as_expr(), u, domain=sp.QQ)
    if eliminated.is_zero or eliminated.degree() < 1:
        return []
    offsets = []
    energy_value = sp.Float(energy.midpoint, PRECISION)
    for root in real_roots(eliminated, width=width):
        offset_value = sp.Float(root.midpoint, PRECISION)
        scale_low = 1 + sum(abs(_to_float(c)) for c in phi_low.coeffs())
        scale_high = 1 + sum(abs(_to_float(c)) for c in phi_high.coeffs())
        low_value = abs(_to_float(phi_low.as_expr().subs({E: energy_value, u: offset_value})))
        high_value = abs(_to_float(phi_high.as_expr().subs({E: energy_value, u: offset_value})))
        if low_value / scale_low < PAIRING_TOL and high_value / scale_high < PAIRING_TOL:
            offsets.append(root)
    return offsets


def _lattice_positive(structure, realization, p, energy, offset):
    """Phi(n) > 0 for n = 1..p, with rho^2(n-1) finite and nonzero so the norms exist."""
    for n in range(1, p + 1):
        phi = sp.simplify(structure.phi.as_expr().subs({N: n, E: energy, u: offset}))
        rho2 = sp.simplify(realization.rho2_of_n.expr.subs({N: n - 1, E: energy, u: offset}))
        if not (rho2.is_finite and rho2 != 0):
            return False
        if not bool(phi > 0):
            return False
    return True


def _interval_positive(structure, p, energy, offset):
    """Phi(x) > 0 on the open interval (0, p+1); None when (E, u) are not exact."""
    if not (energy.is_exact and offset.is_exact):
        return None
    phi_x = sp.Poly(structure.phi.as_expr().subs({E: energy.lower, u: offset.lower}), N, domain=sp.QQ)
    if phi_x.is_zero:
        return False
    upper = sp.Integer(p + 1)
    interior_roots = count_roots(phi_x, 0, upper) - (1 if phi_x.eval(upper) == 0 else 0)
    if interior_roots > 0:
        return False
    return bool(phi_x.eval(upper / 2) > 0)


def find_representations(spec, k_of_h, p_max, energy_window=(-1000, 1000), width=None):
    """Candidates and degenerate families for p = 0..p_max."""
    _, realization, structure = _phi_in_eu(spec, k_of_h)
    window = tuple(sp.Rational(str(v)) if isinstance(v, float) else sp.Rational(v) for v in energy_window)
    candidates = []
    families = []

    phi_zero = _phi_at(structure, 0)
    for p in range(p_max + 1):
        phi_top = _phi_at(structure, p + 1)
        low, high = _split_common_factor(phi_zero, phi_top, p, families)
        if low.total_degree() == 0 or high.total_degree() == 0:
            continue
        eliminated = resultant(low, high, u)
        if eliminated.is_zero:
            families.append(DegenerateFamily(p=p, factor=sp.factor(poly_gcd(low, high).as_expr()),
                                             reason='resultant vanishes identically'))
            continue
        if E not in eliminated.free_symbols:
            continue
        eliminated = sp.Poly(eliminated.as_expr(), E, domain=sp.QQ)
        logger.debug(f"p={p}: resultant in E has degree {eliminated.degree()}")

        for energy in _isolate(eliminated, window, width):
            if energy.is_exact:
                offsets = _offsets_for_exact_energy(low, high, energy.lower, width, p, families)
            else:
                offsets = _offsets_for_interval_energy(low, high, energy, width)
            for offset in offsets:
                e_val = energy.lower if energy.is_exact else sp.Float(energy.midpoint, PRECISION)
                u_val = offset.lower if offset.is_exact else sp.Float(offset.midpoint, PRECISION)
                candidates.append(RepresentationCandidate(
                    p=p,
                    energy=energy,
                    offset=offset,
                    lattice_positive=_lattice_positive(structure, realization, p, e_val, u_val),
                    interval_positive=_interval_positive(structure, p, energy, offset)
                ))
        logger.info(f"p={p}: {sum(1 for c in candidates if c.p == p)} candidates")
    return candidates, families


def solve_constraints(spec, k_of_h, p_max, energy_window=(-1000, 1000), width=None, positive_only=False):
    """
    Solve Phi(0) = Phi(p+1) = 0 for (E, u), p = 0..p_max.

    Every solution is returned with its positivity verdicts unless positive_only is set.
    """
    candidates, families = find_representations(spec, k_of_h, p_max, energy_window, width)
    for family in families:
        logger.warning(f"Degenerate family not solved: {family.to_dict()}")
    if positive_only:
        candidates = [c for c in candidates if c.lattice_positive]
    return candidates


def build_rep(realization, candidate, spec, k_of_h):
    """Matrices of A, B, C on the (p+1)-dimensional Fock space of a candidate."""
    if not candidate.lattice_positive:
        raise NonUnitaryError(f"Candidate {candidate!r} has a non-positive Fock norm",
                              payload=candidate.to_dict())
    spec = spec if spec.is_closed else close_jacobi(spec)
    energy = candidate.energy.lower if candidate.energy.is_exact else sp.Float(candidate.energy.midpoint, PRECISION)
    offset = candidate.offset.lower if candidate.offset.is_exact else sp.Float(candidate.offset.midpoint, PRECISION)
    casimir = sp.sympify(k_of_h).subs(H, energy)
    spec_at = spec.evaluate(energy)
    structure = phi_closed(spec_at, casimir, offset)

    p = candidate.p
    dim = p + 1
    a_values = [_to_float(realization.a(n, offset).subs(E, energy)) for n in range(dim)]
    b_values = [_to_float(realization.b(n, offset).subs(E, energy)) for n in range(dim)]
    phi_values = []
    norms = []
    for n in range(1, dim):
        phi_n = sp.simplify(structure.at(n))
        rho2 = sp.simplify(realization.rho2(n - 1, offset).subs(E, energy))
        norm = sp.simplify(phi_n * rho2)
        if _to_float(norm) <= 0:
            raise NonUnitaryError(f"Fock norm y({n}) = {norm} is not positive")
        phi_values.append(phi_n)
        norms.append(norm)

    mat_a = np.diag(a_values)
    mat_b = np.diag(b_values)
    for n, norm in enumerate(norms, start=1):
        entry = np.sqrt(_to_float(norm))
        mat_b[n - 1, n] = entry
        mat_b[n, n - 1] = entry
    mat_c = mat_a @ mat_b - mat_b @ mat_a

    logger.debug(f"Built {dim}-dimensional rep at E={energy}, u={offset}")
    return FockRep(
        p=p,
        energy=_to_float(energy),
        offset=_to_float(offset),
        mat_n=np.diag(np.arange(dim, dtype=float)),
        mat_a=mat_a,
        mat_b=mat_b,
        mat_c=mat_c,
        casimir_value=_to_float(casimir),
        case=realization.case,
        fock_norms=tuple(norms),
        phi_values=tuple(phi_values),
        energy_exact=energy
    )


def interior_window(realization, spec, k_value, offset, start=0, size=12):
    """
    Non-truncated block of the infinite-dimensional realization in the gauge
    B[n, n+1] = 1, B[n+1, n] = y(n+1). Only entries at least WINDOW_MARGIN away
    from the block edges are meaningful.
    """
    spec = spec if spec.is_closed else close_jacobi(spec)
    casimir = sp.sympify(k_value)
    structure = phi_closed(spec, casimir, offset)
    indices = range(start, start + size)
    a_values = [_to_float(realization.a(n, offset)) for n in indices]
    b_values = [_to_float(realization.b(n, offset)) for n in indices]
    mat_a = np.diag(a_values)
    mat_b = np.diag(b_values)
    norms = []
    for i, n in enumerate(indices):
        if i == 0:
            continue
        rho2 = realization.rho2(n - 1, offset)
        if not rho2.is_finite:
            raise SingularSystemError(f"rho^2 has a pole at N={n - 1}")
        norm = sp.simplify(structure.at(n) * rho2)
        norms.append(norm)
        mat_b[i - 1, i] = 1.0
        mat_b[i, i - 1] = _to_float(norm)
    mat_c = mat_a @ mat_b - mat_b @ mat_a
    return FockRep(
        p=size - 1,
        energy=_to_float(spec.energy) if spec.energy is not None and spec.energy.is_number else float('nan'),
        offset=_to_float(offset),
        mat_n=np.diag(np.array(list(indices), dtype=float)),
        mat_a=mat_a,
        mat_b=mat_b,
        mat_c=mat_c,
        casimir_value=_to_float(casimir),
        case=realization.case,
        fock_norms=tuple(norms),
        margin=WINDOW_MARGIN
    )


def _norm(matrix):
    return float(np.max(np.abs(matrix))) if matrix.size else 0.0


def _interior(matrix, margin):
    if margin == 0:
        return matrix
    return matrix[margin:-margin, margin:-margin]


def relative_residual(lhs, rhs, margin=0, scale=0.0):
    """||lhs - rhs|| / (1 + max(||rhs||, scale)) in the max-entry norm."""
    lhs, rhs = _interior(lhs, margin), _interior(rhs, margin)
    return _norm(lhs - rhs) / (1.0 + max(_norm(rhs), scale))


def _largest(parts, margin):
    """Max-entry norm of the largest summand, the floor for cancellation error."""
    return max(_norm(_interior(part, margin)) for part in parts)


def _numeric_constants(spec, energy):
    spec = spec if spec.is_closed else close_jacobi(spec)
    evaluated = spec.evaluate(energy) if energy is not None else spec
    values = {}
    for name, value in evaluated.constants().items():
        value = sp.sympify(value)
        if value.free_symbols:
            raise QuarticError(f"Structure constant {name} is not numeric at E={energy}: {value}")
        values[name] = _to_float(value)
    coefficients = casimir_coefficients(evaluated)
    return values, coefficients


def _rep_energy(rep):
    return rep.energy_exact if rep.energy_exact is not None else (
        None if np.isnan(rep.energy) else sp.Float(rep.energy, PRECISION))


def verify_algebra(rep, spec, tol=1e-9):
    """Residuals of the three defining relations, the Jacobi identity and the Casimir."""
    c, coefficients = _numeric_constants(spec, _rep_energy(rep))
    a, b, cm = rep.mat_a, rep.mat_b, rep.mat_c
    eye = np.eye(rep.dim)
    margin = rep.margin

    ac_rhs, bc_rhs = relation_rhs(c, a, b, eye)
    casimir_parts = [cm @ cm] + [value * term for value, term in zip(coefficients.as_floats(), casimir_terms(a, b))]
    casimir = sum(casimir_parts[1:], casimir_parts[0])
    casimir_scale = _largest(casimir_parts, margin)
    scalar = float(np.mean(np.diag(_interior(casimir, margin))))

    residuals = {
        'relation_ab': relative_residual(commutator(a, b), cm, margin, _largest([a @ b, b @ a], margin)),
        'relation_ac': relative_residual(commutator(a, cm), ac_rhs, margin, _largest([a @ cm, cm @ a], margin)),
        'relation_bc': relative_residual(commutator(b, cm), bc_rhs, margin, _largest([b @ cm, cm @ b], margin)),
        'jacobi': relative_residual(commutator(a, commutator(b, cm)), commutator(b, commutator(a, cm)), margin),
        'casimir_scalar': relative_residual(casimir, scalar * eye, margin, casimir_scale),
        'casimir_value': relative_residual(casimir, rep.casimir_value * eye, margin, casimir_scale),
    }
    report = VerificationReport(residuals, tol, title='algebra')
    logger.info(f"Algebra check on dim {rep.dim}: passed={report.passed}, max residual {report.max_residual:.3e}")
    return report


def identity_matrices(rep, constants, coefficients):
    """Left- and right-hand sides of the operator identities, keyed by number."""
    c = constants
    a, b, cm = rep.mat_a, rep.mat_b, rep.mat_c
    ac, cmt = anticommutator, commutator
    a2 = a @ a
    a3 = a2 @ a
    a4 = a3 @ a
    a5 = a4 @ a
    b2 = b @ b
    ab = ac(a, b)
    a2b = ac(a2, b)
    a3b = ac(a3, b)
    ab2 = ac(a, b2)

    lhs = {
        1: cmt(a, b),
        2: cmt(a2, b),
        3: cmt(a3, b),
        4: cmt(a4, b),
        5: 2 * a @ cm @ a,
        6: a2 @ cm @ a + a @ cm @ a2,
        7: cmt(b, ab),
        8: cmt(ab, a),
        9: cmt(ab, a2),
        10: cmt(ab, a3),
        11: a3 @ cm @ a + a @ cm @ a3,
        12: cmt(a5, b),
        13: 2 * a2 @ cm @ a2,
        14: cmt(a2b, a),
        15: cmt(a3b, a),
        16: cmt(b2, a),
        17: ac(a, ac(b, cm)),
        18: cmt(a3b, b),
        19: cmt(a2b, b),
        20: ac(b, ac(cm, a2)),
        21: cmt(a2, b2),
        22: cmt(a2, ab),
        23: cmt(a2, a2b),
        24: ac(b, ac(cm, a)),
        25: cmt(cm @ cm, a),
        26: cmt(ab2, a),
        27: cmt(cm @ cm, b),
        28: cmt(ab2, b),
        29: cmt(ab, b),
    }
    L = lhs
    rhs = {
        1: cm,
        2: ac(cm, a),
        3: ac(cm, a2) + L[5] / 2,
        4: ac(cm, a3) + L[6],
        5: ac(cm, a2) - c['beta'] * ac(cm, a) - c['delta'] * cm,
        6: (ac(cm, a3) - 2 * c['beta'] * ac(cm, a2) + (c['beta']**2 - c['delta']) * ac(a, cm)
            + c['beta'] * c['delta'] * cm),
        7: -ac(cm, b),
        8: -ac(cm, a),
        9: -ac(cm, a2) - L[5],
        10: -ac(cm, a3) - 2 * L[6],
        11: ac(cm, a4) - c['delta'] * L[3] + c['beta'] * L[10],
        12: ac(cm, a4) + L[11] + L[13] / 2,
        13: L[11] - c['beta'] * L[6] - c['delta'] / 2 * L[5],
        14: -ac(cm, a2),
        15: -ac(cm, a3),
        16: -ac(cm, b),
        17: ac(cm, ab) + c['tau'] * L[3] + c['alpha'] * L[2] - c['beta'] * L[7] + c['gamma'] * cm,
        18: 1.5 * L[20] - c['beta'] / 2 * L[24] - c['delta'] / 2 * ac(cm, b),
        19: L[24],
        20: (ac(cm, a2b) - c['rho_sc'] * L[21] - c['eta'] * L[2] - c['omega'] * L[23]
             - c['sigma'] * L[22]),
        21: ac(cm, ab) + c['tau'] * L[3] + c['alpha'] * L[2] - c['beta'] * L[7] + c['gamma'] * L[1],
        22: ac(cm, a2) + L[5],
        23: ac(cm, a3) + L[6],
        24: (ac(cm, ab) - c['rho_sc'] * ac(cm, b) - c['eta'] * L[1] + c['omega'] * L[14]
             + c['sigma'] * L[8]),
        25: (-c['tau'] * ac(cm, a3) - c['alpha'] * ac(cm, a2) - c['beta'] * ac(cm, ab)
             - c['gamma'] * ac(cm, a) - c['delta'] * ac(cm, b) - 2 * c['epsilon'] * cm),
        26: -L[17],
        27: (-c['lam'] * ac(cm, a4) - c['mu'] * ac(cm, a3) - c['nu'] * ac(cm, a2) - c['xi'] * ac(cm, a)
             - c['rho_sc'] * ac(cm, b2) - c['eta'] * ac(cm, b) - c['omega'] * ac(cm, a2b)
             - c['sigma'] * ac(cm, ab) - 2 * c['zeta'] * cm),
        28: ac(cm, b2),
        29: ac(cm, b),
    }

    k = coefficients
    closing_ka = [L[25], k[0] * L[15], k[1] * L[14], k[2] * L[26], k[3] * L[8], k[4] * L[16], -k[5] * L[1]]
    closing_kb = [L[27], k[0] * L[18], k[1] * L[19], k[2] * L[28], k[3] * L[29],
                  k[6] * L[12], k[7] * L[4], k[8] * L[3], k[9] * L[2], k[10] * L[1]]
    return lhs, rhs, closing_ka, closing_kb


def _closing_residual(terms, direct, margin):
    total = sum(terms)
    scale = 1.0 + sum(_norm(_interior(term, margin)) for term in terms)
    return max(_norm(_interior(total, margin)), _norm(_interior(total - direct, margin))) / scale


def verify_identities(rep, spec, tol=1e-9):
    """Residual of each numbered operator identity plus the [K,A] and [K,B] closing relations."""
    constants, coefficients = _numeric_constants(spec, _rep_energy(rep))
    values = coefficients.as_floats()
    lhs, rhs, closing_ka, closing_kb = identity_matrices(rep, constants, values)
    margin = rep.margin

    residuals = {f'identity_{number}': relative_residual(lhs[number], rhs[number], margin)
                 for number in sorted(lhs)}
    casimir = evaluate_casimir_matrix(values, rep.mat_a, rep.mat_b, rep.mat_c)
    residuals['closing_KA'] = _closing_residual(closing_ka, commutator(casimir, rep.mat_a), margin)
    residuals['closing_KB'] = _closing_residual(closing_kb, commutator(casimir, rep.mat_b), margin)

    report = VerificationReport(residuals, tol, title='identities')
    if not report.passed:
        logger.warning(f"Identity check failed for {report.failures}")
    return report


def fit_casimir_coefficients(rep):
    """
    Least-squares c1..c11 and the scalar from K = C^2 + sum c_i T_i being a multiple of 1.

    Only the interior block is fitted, so truncated windows can be used; the block
    must keep MIN_FIT_DIM rows after the margin is dropped.
    """
    margin = rep.margin
    inner = rep.dim - 2 * margin
    if inner < MIN_FIT_DIM:
        raise SingularSystemError(f"Casimir fit needs an interior block of dim >= {MIN_FIT_DIM}, got {inner}",
                                  payload={'dim': rep.dim, 'margin': margin})
    terms = casimir_terms(rep.mat_a, rep.mat_b) + [-np.eye(rep.dim)]
    design = np.column_stack([_interior(term, margin).ravel() for term in terms])
    target = -_interior(rep.mat_c @ rep.mat_c, margin).ravel()

    scales = np.linalg.norm(design, axis=0)
    scales[scales == 0] = 1.0
    solution, _, rank, _ = np.linalg.lstsq(design / scales, target, rcond=None)
    if rank < design.shape[1]:
        raise SingularSystemError(f"Casimir fit is rank deficient ({rank} < {design.shape[1]})",
                                  payload={'rank': int(rank)})
    solution = solution / scales
    residual = float(np.linalg.norm(design @ solution - target) / (1.0 + np.linalg.norm(target)))
    coefficients = CasimirCoefficients.from_sequence(float(v) for v in solution[:11])
    return CasimirFit(coefficients=coefficients, casimir_value=float(solution[11]),
                      rank=int(rank), residual=residual)

