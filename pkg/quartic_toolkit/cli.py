"""
Command-line entry point for the quartic algebra toolkit.

    python cli.py verify --config example.json --p-max 3
    python cli.py example --l 1 --out example.json
"""
import argparse
import csv
import io
import json
import logging
import sys

import sympy as sp

from config import Config
from models.realization import E, K
from services.algebra import casimir_coefficients, casimir_in_h, close_jacobi, reduction_check
from services.example import algebraic_energy, generate_example
from services.oscillator import phi_closed, phi_oracle, realize
from services.poisson import jacobi_residual, solve_casimir
from services.ratcore import to_rational
from services.schrodinger import combined_spectrum, compare_with_algebraic, eigenvalues_1d, example_potentials, table_to_csv
from services.spectra import (MIN_FIT_DIM, build_rep, fit_casimir_coefficients, solve_constraints,
                              verify_algebra, verify_identities)
from utils.errors import ConfigError, QuarticError
from utils.logging_setup import configure_logging
from utils.schemas import emit_config, parse_config

logger = logging.getLogger(__name__)

SUBCOMMANDS = ('casimir', 'realize', 'phi', 'spectrum', 'verify', 'schrodinger', 'example')
SPECTRUM_COLUMNS = ('p', 'E', 'u', 'dim', 'lattice_positive', 'interval_positive')
# oracle sample point for the phi subcommand
ORACLE_ENERGY = sp.Rational(3, 11)
ORACLE_OFFSET = sp.Rational(1, 7)
SCHRODINGER_LEVELS = 8


def _setting(options, name, document, default):
    value = getattr(options, name, None)
    if value is not None:
        return value
    if document is not None and getattr(document, name, None) is not None:
        return getattr(document, name)
    return default


def _require_document(config, subcommand):
    if config is None:
        raise ConfigError(f"'{subcommand}' needs --config")
    return config


def _require_casimir(config, subcommand):
    if config.casimir_of_h is None:
        raise ConfigError(f"'{subcommand}' needs casimir_of_h in the config")
    return config.casimir_of_h


def _casimir(config, options):
    spec = close_jacobi(config.to_spec())
    coefficients = casimir_coefficients(spec)
    data = {'spec': spec.to_dict(), 'coefficients': coefficients.to_dict()}
    passed = True
    if not spec.is_quantum:
        data['jacobi_residual'] = str(jacobi_residual(spec))
        solved = solve_casimir(spec)
        agrees = all(sp.simplify(x - y) == 0 for x, y in zip(solved.as_tuple(), coefficients.as_tuple()))
        data['bracket_solution_agrees'] = agrees
        passed = agrees and data['jacobi_residual'] == '0'
    report = reduction_check(spec)
    data['reduction'] = report.to_dict()
    return {'passed': passed and report.passed, 'data': data}


def _realize(config, options):
    realization = realize(close_jacobi(config.to_spec()))
    return {'passed': realization.verified, 'data': realization.to_dict()}


def _phi(config, options):
    spec = close_jacobi(config.to_spec())
    structure = phi_closed(spec, K)
    sample = spec.evaluate(ORACLE_ENERGY)
    closed_at = phi_closed(sample, K, ORACLE_OFFSET)
    oracle = {}
    for n in (1, 2, 3):
        expected = phi_oracle(sample, K, ORACLE_OFFSET, n)
        oracle[str(n)] = sp.simplify(closed_at.at(n) - expected) == 0
    data = structure.to_dict()
    data['oracle_agrees'] = oracle
    return {'passed': all(oracle.values()), 'data': data}


def _candidates(config, options):
    spec = close_jacobi(config.to_spec())
    k_of_h = casimir_in_h(spec, _require_casimir(config, options.subcommand))
    p_max = _setting(options, 'p_max', config, Config.P_MAX)
    window = _setting(options, 'energy_window', config, Config.ENERGY_WINDOW)
    width = _setting(options, 'root_width', config, Config.ROOT_WIDTH)
    return spec, k_of_h, solve_constraints(spec, k_of_h, p_max, window, width)


def _spectrum(config, options):
    _, _, candidates = _candidates(config, options)
    rows = [candidate.csv_row() for candidate in candidates]
    return {'passed': True, 'data': [c.to_dict() for c in candidates], 'rows': rows,
            'columns': SPECTRUM_COLUMNS}


def _verify(config, options):
    spec, k_of_h, candidates = _candidates(config, options)
    tol = _setting(options, 'tol', config, Config.VERIFY_TOL)
    realization = realize(spec.evaluate(E))
    reports = []
    for candidate in (c for c in candidates if c.lattice_positive):
        rep = build_rep(realization, candidate, spec, k_of_h)
        report = verify_algebra(rep, spec, tol).merged(verify_identities(rep, spec, tol),
                                                         title=f'p={candidate.p}')
        entry = {'candidate': candidate.to_dict(), 'report': report.to_dict()}
        if rep.dim >= MIN_FIT_DIM:
            entry['casimir_fit'] = fit_casimir_coefficients(rep).to_dict()
        reports.append((report, entry))
    if not reports:
        logger.warning("No unitary representation to verify")
    passed = bool(reports) and all(report.passed for report, _ in reports)
    return {'passed': passed, 'data': [entry for _, entry in reports]}


def _schrodinger(config, options):
    l = _setting(options, 'l', config, None)  # noqa: E741
    if l is None:
        raise ConfigError("'schrodinger' needs --l or l in the config")
    x_pot, y_pot = example_potentials(l)
    x_levels = eigenvalues_1d(x_pot, n_levels=SCHRODINGER_LEVELS)
    y_levels = eigenvalues_1d(y_pot, n_levels=2 * SCHRODINGER_LEVELS)
    e_max = float(x_levels[0][0] + y_levels[0][0]) + 2 * SCHRODINGER_LEVELS - 2
    table = combined_spectrum(x_levels, y_levels, e_max, Config.CLUSTER_TOL)

    data = {'table': table.to_dict()}
    passed = True
    if config is not None and config.casimir_of_h is not None:
        _, _, candidates = _candidates(config, options)
        positive = [c for c in candidates if c.lattice_positive]
        comparison = compare_with_algebraic(table, positive, tol=10 * Config.CLUSTER_TOL)
        data['comparison'] = comparison.to_dict()
        passed = comparison.all_matched
    data['algebraic_ladder'] = [str(algebraic_energy(p, l)) for p in range(SCHRODINGER_LEVELS)]
    rows = [level.csv_row() for level in table.levels]
    return {'passed': passed, 'data': data, 'rows': rows, 'table': table}


def _example(config, options):
    l = _setting(options, 'l', config, None)  # noqa: E741
    if l is None:
        raise ConfigError("'example' needs --l")
    document = generate_example(l, p_max=_setting(options, 'p_max', None, Config.P_MAX),
                                tol=getattr(options, 'tol', None))
    text = emit_config(document)
    return {'passed': True, 'data': json.loads(text), 'text': text}


HANDLERS = {
    'casimir': _casimir,
    'realize': _realize,
    'phi': _phi,
    'spectrum': _spectrum,
    'verify': _verify,
    'schrodinger': _schrodinger,
    'example': _example,
}


def run_pipeline(subcommand, config, options):
    """Run one subcommand; returns a dict with 'passed' and 'data' (and CSV rows where tabular)."""
    if subcommand not in HANDLERS:
        raise ConfigError(f"Unknown subcommand: {subcommand}")
    if subcommand not in ('schrodinger', 'example'):
        _require_document(config, subcommand)
    options.subcommand = subcommand
    logger.info(f"Running {subcommand}")
    result = HANDLERS[subcommand](config, options)
    logger.info(f"{subcommand} finished: passed={result['passed']}")
    return result


def render(result, fmt):
    if 'text' in result:
        return result['text']
    if fmt == 'csv' and 'rows' in result:
        stream = io.StringIO()
        if 'table' in result:
            table_to_csv(result['table'], stream)
        else:
            writer = csv.DictWriter(stream, fieldnames=result['columns'])
            writer.writeheader()
            writer.writerows(result['rows'])
        return stream.getvalue()
    return json.dumps({'passed': result['passed'], 'data': result['data']}, indent=2, default=str)


def build_parser():
    parser = argparse.ArgumentParser(description='Quartic Poisson and associative algebra toolkit')
    parser.add_argument('subcommand', choices=SUBCOMMANDS, help='Pipeline stage to run')
    parser.add_argument('--config', type=str, default=None, help='JSON config document')
    parser.add_argument('--l', type=str, default=None, help='Angular parameter of the example (rational)')
    parser.add_argument('--p-max', dest='p_max', type=int, default=None, help='Largest p = dim - 1 to solve')
    parser.add_argument('--tol', type=float, default=None, help='Verification tolerance')
    parser.add_argument('--out', type=str, default=None, help='Output file (default: stdout)')
    parser.add_argument('--format', dest='fmt', choices=('csv', 'json'), default='json', help='Output format')
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    configure_logging(Config.LOG_LEVEL, Config.LOG_FILE)
    try:
        if args.l is not None:
            args.l = to_rational(args.l)
        config = None
        if args.config:
            with open(args.config, encoding='utf-8') as handle:
                config = parse_config(handle.read())
        result = run_pipeline(args.subcommand, config, args)
        text = render(result, args.fmt)
        if args.out:
            with open(args.out, 'w', encoding='utf-8', newline='') as handle:
                handle.write(text)
        else:
            sys.stdout.write(text + ('' if text.endswith('\n') else '\n'))
        return 0 if result['passed'] else 1
    except QuarticError as e:
        logger.error(f"{type(e).__name__}: {e.message}")
        print(json.dumps(e.to_dict(), default=str))
        return e.exit_code
    except OSError as e:
        logger.error(f"Cannot access file: {e}")
        print(json.dumps(ConfigError(str(e)).to_dict()))
        return ConfigError.exit_code
    except Exception as e:
        logger.exception(f"Unexpected error: {str(e)}")
        return 1


if __name__ == '__main__':
    sys.exit(main())
