"""
Finite-difference cross-check of the example spectrum.

The Hamiltonian separates into a harmonic y part and an extended radial
oscillator in x. Each part is discretized with second-order central
differences and Dirichlet ends, giving a symmetric tridiagonal matrix.
"""
import csv
import logging

import numpy as np
import sympy as sp
from scipy.linalg import eigh_tridiagonal

from config import Config
from models.potential import EXTENDED_OSCILLATOR_X, HARMONIC_Y, PotentialSpec, SpectrumComparison, SpectrumLevel, SpectrumTable
from utils.errors import DomainTooSmallError, QuarticError

logger = logging.getLogger(__name__)

# fraction of the grid, at each checked end, where eigenfunctions must have decayed
EDGE_FRACTION = 0.05
CSV_COLUMNS = ('energy', 'multiplicity', 'error_estimate')


def _domain(pot):
    if pot.domain is not None:
        return pot.domain
    return Config.X_DOMAIN if pot.kind == EXTENDED_OSCILLATOR_X else Config.Y_DOMAIN


def potential(pot, q):
    """Potential energy of one coordinate on the points q."""
    q = np.asarray(q, dtype=np.float64)
    if pot.kind == HARMONIC_Y:
        return q**2 / 4
    l = pot.l  # noqa: E741
    shifted = 1 + 2 * l + q**2
    return (q**2 / 4 + l * (l + 1) / q**2 + 4 / shifted
            - 8 * (1 + 2 * l) / shifted**2 - 1)


def _grid(domain, n_points):
    low, high = domain
    h = (high - low) / (n_points + 1)
    return low + h * np.arange(1, n_points + 1), h


def _solve(pot, n_points, n_levels):
    q, h = _grid(_domain(pot), n_points)
    diagonal = 2 / h**2 + potential(pot, q)
    off_diagonal = np.full(n_points - 1, -1 / h**2)
    energies, vectors = eigh_tridiagonal(diagonal, off_diagonal, select='i',
                                         select_range=(0, n_levels - 1))
    return energies, vectors


def _check_decay(pot, vectors, tolerance):
    n_points = vectors.shape[0]
    edge = max(1, int(EDGE_FRACTION * n_points))
    for level in range(vectors.shape[1]):
        psi = np.abs(vectors[:, level])
        peak = psi.max()
        ends = [psi[-edge:]]
        if not pot.singular_left:
            ends.append(psi[:edge])
        tail = max(end.max() for end in ends)
        if tail > tolerance * peak:
            raise DomainTooSmallError(
                f"Level {level} of {pot.kind} has not decayed at the domain boundary",
                payload={'level': level, 'tail_ratio': float(tail / peak), 'domain': list(_domain(pot))})


def eigenvalues_1d(pot, n_points=None, n_levels=8, decay_tol=None):
    """
    Lowest n_levels eigenvalues with a Richardson error estimate.

    Solves on n_points and on 2 n_points + 1 interior points (half the spacing),
    extrapolates the O(h^2) error away and returns (energies, error_estimates).
    """
    n_points = n_points or Config.GRID_POINTS
    decay_tol = Config.BOUNDARY_DECAY if decay_tol is None else decay_tol
    if n_levels < 1 or n_levels > n_points:
        raise QuarticError(f"Cannot compute {n_levels} levels on {n_points} points")

    coarse, _ = _solve(pot, n_points, n_levels)
    fine, vectors = _solve(pot, 2 * n_points + 1, n_levels)
    _check_decay(pot, vectors, decay_tol)

    extrapolated = (4 * fine - coarse) / 3
    errors = np.abs(extrapolated - fine)
    logger.debug(f"{pot.kind} l={pot.l}: levels {np.round(extrapolated, 8).tolist()}")
    return extrapolated, errors


def combined_spectrum(x_levels, y_levels, e_max, cluster_tol=None):
    """Sum the separated levels up to e_max and cluster near-degenerate sums."""
    cluster_tol = Config.CLUSTER_TOL if cluster_tol is None else cluster_tol
    x_energies, x_errors = x_levels
    y_energies, y_errors = y_levels

    sums = sorted(
        (ex + ey, ex_err + ey_err, (i, j))
        for i, (ex, ex_err) in enumerate(zip(x_energies, x_errors))
        for j, (ey, ey_err) in enumerate(zip(y_energies, y_errors))
        if ex + ey <= e_max
    )

    levels = []
    cluster = []
    for entry in sums:
        if cluster and entry[0] - cluster[-1][0] > cluster_tol:
            levels.append(_cluster_level(cluster))
            cluster = []
        cluster.append(entry)
    if cluster:
        levels.append(_cluster_level(cluster))

    logger.info(f"Combined spectrum: {len(levels)} levels up to E = {e_max}")
    return SpectrumTable(levels=tuple(levels), e_max=e_max, cluster_tol=cluster_tol)


def _cluster_level(cluster):
    energies = np.array([entry[0] for entry in cluster])
    spread = float(energies.max() - energies.min())
    return SpectrumLevel(
        energy=float(energies.mean()),
        multiplicity=len(cluster),
        error_estimate=max(entry[1] for entry in cluster) + spread,
        components=tuple(entry[2] for entry in cluster)
    )


def _estimate_shift(table, groups, tol):
    """Offset aligning the most (energy, p) groups with levels of multiplicity at least p+1."""
    best = None
    for level in table.levels:
        for value, _ in groups:
            shift = level.energy - value
            matched, unions, deviation = 0, 0, 0.0
            for energy, p in groups:
                nearest = min(table.levels, key=lambda lv: abs(lv.energy - (energy + shift)))
                distance = abs(nearest.energy - (energy + shift))
                if distance < tol and nearest.multiplicity >= p + 1:
                    matched += 1
                    unions += nearest.multiplicity > p + 1
                    deviation += distance
            score = (-matched, unions, round(abs(shift) / tol), deviation)
            if best is None or score < best[0]:
                best = (score, shift)
    return best[1]


def compare_with_algebraic(table, candidates, tol=1e-3, shift=None):
    """
    Match algebraic representation energies with numeric levels.

    A (p+1)-dimensional representation needs a numeric level of multiplicity at
    least p+1; a larger multiplicity is reported as a union of representations.
    When shift is None the constant offset between the two ladders is estimated
    from the data rather than taken from the potential's printed constant.
    """
    groups = {}
    for candidate in candidates:
        value = float(candidate.energy.midpoint)
        energy = next((e for e, p in groups if p == candidate.p and abs(e - value) < tol), value)
        groups[(energy, candidate.p)] = groups.get((energy, candidate.p), 0) + 1
    algebraic = sorted({energy for energy, _ in groups})
    numeric = table.energies
    if not algebraic or not numeric:
        return SpectrumComparison(shift=0.0 if shift is None else shift, shift_estimated=shift is None,
                                  unmatched_algebraic=algebraic)

    estimated = shift is None
    if estimated:
        shift = _estimate_shift(table, groups, tol)
        logger.info(f"Estimated offset between numeric and algebraic energies: {shift:.6g}")

    matches = []
    unmatched = []
    too_few = []
    for (value, p), count in sorted(groups.items()):
        level = min(table.levels, key=lambda lv: abs(lv.energy - (value + shift)))
        if abs(level.energy - (value + shift)) >= tol:
            unmatched.append(value)
            continue
        entry = {
            'algebraic_energy': value,
            'p': p,
            'numeric_energy': level.energy,
            'numeric_multiplicity': level.multiplicity,
            'representations': count,
            'union_of_representations': level.multiplicity > p + 1
        }
        if level.multiplicity < p + 1:
            too_few.append(entry)
        else:
            matches.append(entry)
    if unmatched:
        logger.warning(f"Algebraic energies without numeric partner: {unmatched}")
    if too_few:
        logger.warning(f"Numeric levels with multiplicity below p+1: "
                       f"{[(e['algebraic_energy'], e['p']) for e in too_few]}")
    return SpectrumComparison(shift=float(shift), shift_estimated=estimated, matches=matches,
                              unmatched_algebraic=sorted(set(unmatched)), multiplicity_short=too_few)


def example_potentials(l):
    """The two separated parts of the example Hamiltonian."""
    l = float(sp.sympify(l))  # noqa: E741
    return (PotentialSpec(EXTENDED_OSCILLATOR_X, l=l), PotentialSpec(HARMONIC_Y, l=l))


def table_to_csv(table, stream):
    writer = csv.DictWriter(stream, fieldnames=CSV_COLUMNS)
    writer.writeheader()
    for level in table.levels:
        writer.writerow(level.csv_row())
