"""
The Laguerre exceptional-orthogonal-polynomial example: a quantum quartic
algebra with delta = 16 whose structure function factors into five linear
terms in t = N + u.
"""
import logging

import sympy as sp

from models.algebra import H, AlgebraSpec
from models.config_document import ConfigDocument
from models.realization import t
from services.algebra import casimir_in_h, close_jacobi
from services.oscillator import phi_closed
from utils.errors import ConfigError, SingularSystemError

logger = logging.getLogger(__name__)

EXAMPLE_DELTA = 16
DEFAULT_P_MAX = 3

_UNKNOWNS = sp.symbols('lam_x mu_x nu_x xi_x zeta_x K_x')


def factored_structure_function(l, energy=H, shifted=t):
    """Phi as the product of its five linear factors in t = N + u."""
    e = energy
    return sp.Rational(1, 64) * ((2 + e - 4 * shifted)
                                 * (-1 + e - 2 * l + 4 * shifted)
                                 * (-3 + e + 2 * l + 4 * shifted)
                                 * (1 + e + 2 * l + 4 * shifted)
                                 * (5 + e + 2 * l + 4 * shifted))


def offset_roots(l, energy):
    """The offsets u with Phi(E, u, 0) = 0."""
    roots = sp.roots(sp.Poly(factored_structure_function(l, energy, t), t))
    return sorted(roots, key=sp.default_sort_key)


def algebraic_energy(p, l):
    """Energy of the (p+1)-dimensional unitary representation: E = 2p + l + 3/2."""
    return 2 * sp.Integer(p) + sp.sympify(l) + sp.Rational(3, 2)


def printed_constants(l):
    """
    The structure constants and K(H) as they appear in the published example.

    The constant terms of zeta and K are not well formed in print and are left out.
    """
    R = sp.Rational
    return {
        'lam': R(-5, 2),
        'mu': -3 * H - (10 + 4 * l),
        'nu': -R(3, 2) * H**2 - (15 + 6 * l) * H - (25 + 18 * l),
        'xi': H**3 - (22 + 12 * l) * H - (35 + 34 * l - 12 * l**2 - 8 * l**3),
        'zeta': R(3, 4) * H**4 + (5 + 2 * l) * H**3 + (3 + 6 * l) * H**2 - (20 + 8 * l) * H,
        'casimir_of_h': (-R(1, 2) * H**5 - (5 + 2 * l) * H**4 - (14 + 12 * l) * H**3
                         + (-1 + 2 * l)**2 * (5 + 2 * l) * H**2
                         + R(1, 2) * (149 + 32 * l + 8 * l**2 + 64 * l**3 + 16 * l**4) * H),
    }


_CONSTANT_TERM_UNRELIABLE = ('zeta', 'casimir_of_h')


def _compare(name, derived, printed):
    derived = sp.expand(derived)
    printed = sp.expand(printed)
    if name in _CONSTANT_TERM_UNRELIABLE:
        derived_part = sp.expand(derived - derived.subs(H, 0))
        difference = sp.expand(derived_part - printed)
        note = (f"{name}: constant term back-solved as {sp.factor(derived.subs(H, 0))}; "
                "the printed constant term is not well formed")
        notes = [note]
    else:
        difference = sp.expand(derived - printed)
        notes = []
    if difference != 0:
        notes.insert(0, f"{name}: printed {printed}, consistent value {derived}")
    return notes


def solve_example_constants(l):
    """Back-solve lam, mu, nu, xi, zeta and K(H) from the factored structure function."""
    lam, mu, nu, xi, zeta, casimir = _UNKNOWNS
    spec = close_jacobi(AlgebraSpec(mode='quantum', delta=EXAMPLE_DELTA,
                                    lam=lam, mu=mu, nu=nu, xi=xi, zeta=zeta))
    structure = phi_closed(spec, casimir, offset=0)
    in_t = sp.expand(structure.phi.as_expr().subs(structure.phi.gens[0], t))
    target = sp.expand(factored_structure_function(l, H, t))
    equations = sp.Poly(in_t - target, t).all_coeffs()
    solutions = sp.solve(equations, _UNKNOWNS, dict=True)
    if len(solutions) != 1:
        raise SingularSystemError("Example constants are not uniquely determined",
                                  payload={'solutions': len(solutions)})
    solution = solutions[0]
    values = {
        'lam': sp.simplify(solution[lam]),
        'mu': sp.expand(solution[mu]),
        'nu': sp.expand(solution[nu]),
        'xi': sp.expand(solution[xi]),
        'zeta': sp.expand(solution[zeta]),
        'casimir_of_h': sp.expand(solution[casimir]),
    }
    logger.debug(f"Example constants for l={l}: {values}")
    return values


def generate_example(l, p_max=DEFAULT_P_MAX, energy_window=None, tol=None, root_width=None):
    """
    Build the config document of the example for angular parameter l.

    l may be a rational or a sympy symbol; a symbolic l yields a document that can
    be inspected but not serialized.
    """
    l = sp.sympify(l)
    if l.is_number and l < 0:
        raise ConfigError(f"l must be non-negative, got {l}", payload={'l': str(l)})

    values = solve_example_constants(l)
    if H in values['lam'].free_symbols:
        raise ConfigError("Back-solved lambda depends on H")

    notes = []
    for name, printed in printed_constants(l).items():
        notes.extend(_compare(name, values[name], printed))
    for note in notes:
        logger.warning(f"Example l={l}: {note}")

    document = ConfigDocument(
        mode='quantum',
        delta=sp.Integer(EXAMPLE_DELTA),
        lam=values['lam'],
        mu=values['mu'],
        nu=values['nu'],
        xi=values['xi'],
        zeta=values['zeta'],
        casimir_of_h=values['casimir_of_h'],
        l=l,
        p_max=p_max,
        energy_window=energy_window,
        tol=tol,
        root_width=root_width,
        notes=tuple(notes)
    )
    casimir_in_h(close_jacobi(document.to_spec()), document.casimir_of_h)
    logger.info(f"Generated example config for l={l} with {len(notes)} notes")
    return document
