"""marshmallow schemas for run configuration documents."""
import json
from fractions import Fraction

import sympy as sp
from marshmallow import RAISE, Schema, ValidationError, fields, post_load, validate, validates_schema

from models.algebra import POLYNOMIAL_CAPS, polynomial_in_h
from models.config_document import ConfigDocument
from services.ratcore import to_rational
from utils.errors import ConfigError, QuarticError


class RationalString(fields.Field):
    """An exact rational given as an int or a string such as "-5/2"."""

    default_error_messages = {
        'invalid': 'Not an exact rational: {value!r}',
        'float': 'Floats are not exact; write the value as a string such as "1/3"',
    }

    def _deserialize(self, value, attr, data, **kwargs):
        if isinstance(value, float):
            raise self.make_error('float')
        if isinstance(value, bool) or not isinstance(value, (int, str, Fraction)):
            raise self.make_error('invalid', value=value)
        try:
            return to_rational(value)
        except QuarticError as e:
            raise ValidationError(e.message) from e

    def _serialize(self, value, attr, obj, **kwargs):
        if value is None:
            return None
        return str(value)


class PolynomialField(fields.List):
    """Ascending-power H coefficients as a list of rational strings."""

    def __init__(self, cap=None, **kwargs):
        super().__init__(RationalString(), **kwargs)
        self.cap = cap

    def _deserialize(self, value, attr, data, **kwargs):
        coefficients = super()._deserialize(value, attr, data, **kwargs)
        while coefficients and coefficients[-1] == 0:
            coefficients.pop()
        if self.cap is not None and len(coefficients) - 1 > self.cap:
            raise ValidationError(f'Degree in H exceeds {self.cap}')
        return coefficients


class BaseSchema(Schema):
    """Base schema: unknown keys are errors"""
    class Meta:
        unknown = RAISE
        ordered = True


class ConfigDocumentSchema(BaseSchema):
    """Schema for a run configuration document"""
    mode = fields.Str(validate=validate.OneOf(['classical', 'quantum']), load_default='quantum')
    tau = RationalString(load_default=0)
    lambda_ = RationalString(data_key='lambda', load_default=0)
    beta = RationalString(load_default=0)
    alpha = PolynomialField(cap=POLYNOMIAL_CAPS['alpha'], load_default=list)
    gamma = PolynomialField(cap=POLYNOMIAL_CAPS['gamma'], load_default=list)
    delta = PolynomialField(cap=POLYNOMIAL_CAPS['delta'], load_default=list)
    epsilon = PolynomialField(cap=POLYNOMIAL_CAPS['epsilon'], load_default=list)
    mu = PolynomialField(cap=POLYNOMIAL_CAPS['mu'], load_default=list)
    nu = PolynomialField(cap=POLYNOMIAL_CAPS['nu'], load_default=list)
    xi = PolynomialField(cap=POLYNOMIAL_CAPS['xi'], load_default=list)
    zeta = PolynomialField(cap=POLYNOMIAL_CAPS['zeta'], load_default=list)
    casimir_of_h = PolynomialField(cap=5, load_default=None, allow_none=True)
    l = RationalString(load_default=None, allow_none=True)  # noqa: E741
    p_max = fields.Int(validate=validate.Range(min=0), load_default=None, allow_none=True)
    energy_window = fields.List(RationalString(), validate=validate.Length(equal=2),
                                load_default=None, allow_none=True)
    tol = fields.Float(validate=validate.Range(min=0, min_inclusive=False),
                       load_default=None, allow_none=True)
    root_width = fields.Float(validate=validate.Range(min=0, min_inclusive=False),
                              load_default=None, allow_none=True)
    notes = fields.List(fields.Str(), load_default=list)

    @validates_schema
    def validate_document(self, data, **kwargs):
        window = data.get('energy_window')
        if window and not window[0] < window[1]:
            raise ValidationError('energy_window must be increasing', 'energy_window')
        if data.get('l') is not None and data['l'] < 0:
            raise ValidationError('l must be non-negative', 'l')

    @post_load
    def make_document(self, data, **kwargs):
        values = {name: polynomial_in_h(data[name]) for name in POLYNOMIAL_CAPS}
        casimir = data.get('casimir_of_h')
        window = data.get('energy_window')
        return ConfigDocument(
            mode=data['mode'],
            tau=sp.sympify(data['tau']),
            lam=sp.sympify(data['lambda_']),
            beta=sp.sympify(data['beta']),
            casimir_of_h=None if casimir is None else polynomial_in_h(casimir),
            l=data.get('l'),
            p_max=data.get('p_max'),
            energy_window=None if window is None else tuple(window),
            tol=data.get('tol'),
            root_width=data.get('root_width'),
            notes=tuple(data.get('notes') or ()),
            **values
        )


def parse_config(text):
    """Parse and validate a JSON config document; raises ConfigError."""
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise ConfigError(f"Config is not valid JSON: {e.msg}", payload={'line': e.lineno}) from e
    if not isinstance(raw, dict):
        raise ConfigError("Config must be a JSON object")
    try:
        return ConfigDocumentSchema().load(raw)
    except ValidationError as e:
        raise ConfigError("Invalid config document", payload=e.messages) from e


def emit_config(document):
    """Serialize a ConfigDocument to JSON text that parse_config reads back."""
    if document.l is not None and not sp.sympify(document.l).is_Rational:
        raise ConfigError(f"Cannot serialize a symbolic l: {document.l}")
    data = document.to_dict()
    return json.dumps(data, indent=2)
