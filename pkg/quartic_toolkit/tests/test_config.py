import json

import pytest
import sympy as sp

from config import Config, TestConfig
from models.algebra import H
from services.example import generate_example
from utils.errors import ConfigError, NonUnitaryError, QuarticError
from utils.schemas import emit_config, parse_config


def test_defaults():
    assert Config.P_MAX >= 1
    assert Config.ENERGY_WINDOW[0] < Config.ENERGY_WINDOW[1]
    assert TestConfig.LOG_LEVEL == 'DEBUG'


def test_parse_minimal_document():
    document = parse_config('{"delta": ["16"], "lambda": "-5/4", "mu": ["-14", "-3"]}')
    assert document.mode == 'quantum'
    assert document.delta == 16
    assert document.lam == sp.Rational(-5, 4)
    assert document.mu == -14 - 3 * H
    assert document.casimir_of_h is None


def test_parse_trims_trailing_zero_coefficients():
    document = parse_config('{"alpha": ["1", "0", "0"]}')
    assert document.alpha == 1


@pytest.mark.parametrize('text', [
    '{"delta": ["16"], "kappa": "1"}',
    '{"delta": [0.5]}',
    '{"lambda": true}',
    '{"delta": ["0", "0", "1"]}',
    '{"mode": "semiclassical"}',
    '{"energy_window": ["5", "1"]}',
    '{"l": "-1"}',
    '{"casimir_of_h": ["0", "0", "0", "0", "0", "0", "1"]}',
    '[1, 2]',
    '{not json',
])
def test_parse_rejects_invalid_documents(text):
    with pytest.raises(ConfigError) as excinfo:
        parse_config(text)
    assert excinfo.value.exit_code == 2


def test_error_payload_names_field():
    with pytest.raises(ConfigError) as excinfo:
        parse_config('{"delta": ["0", "0", "1"]}')
    assert 'delta' in excinfo.value.payload


def test_error_to_dict():
    error = NonUnitaryError('negative norm', payload={'n': 2})
    assert error.to_dict() == {'success': False, 'message': 'negative norm', 'error_code': 6,
                               'details': {'n': 2}}
    assert QuarticError('boom', exit_code=9).exit_code == 9


def test_example_document_round_trip(example_config):
    document = example_config(1)
    parsed = parse_config(emit_config(document))
    for name in ('lam', 'mu', 'nu', 'xi', 'zeta', 'delta', 'casimir_of_h', 'l', 'p_max'):
        assert sp.expand(getattr(parsed, name) - getattr(document, name)) == 0
    assert parsed.notes == document.notes


def test_example_lambda_is_energy_independent():
    l = sp.Symbol('l')  # noqa: E741
    document = generate_example(l)
    assert document.lam == sp.Rational(-5, 4)
    assert document.delta == 16


def test_example_notes_record_printed_lambda(example_config):
    notes = example_config(1).notes
    assert any(note.startswith('lam: printed -5/2') for note in notes)


def test_symbolic_example_cannot_be_serialized():
    with pytest.raises(ConfigError):
        emit_config(generate_example(sp.Symbol('l')))


def test_negative_l_is_rejected():
    with pytest.raises(ConfigError):
        generate_example(-1)


def test_emitted_json_uses_strings(example_config):
    data = json.loads(emit_config(example_config(1)))
    assert data['lambda'] == '-5/4'
    assert all(isinstance(c, str) for c in data['zeta'])
