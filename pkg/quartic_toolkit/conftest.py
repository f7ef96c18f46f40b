import os
import sys

import numpy as np
import pytest
import sympy as sp

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from config import TestConfig  # noqa: E402
from models.algebra import AlgebraSpec  # noqa: E402
from services.algebra import close_jacobi  # noqa: E402
from services.example import generate_example  # noqa: E402


@pytest.fixture
def test_config():
    return TestConfig


@pytest.fixture(scope='session')
def example_config():
    """Config documents of the delta = 16 example, cached per l."""
    cache = {}

    def build(l=1):  # noqa: E741
        key = sp.Rational(l)
        if key not in cache:
            cache[key] = generate_example(key, p_max=TestConfig.P_MAX)
        return cache[key]
    return build


@pytest.fixture
def example_spec(example_config):
    return close_jacobi(example_config(1).to_spec())


@pytest.fixture
def case1_spec():
    """A Case 1 spec with every structure constant nonzero except beta."""
    return close_jacobi(AlgebraSpec.build(
        tau=1, lam=2, alpha=['1/2'], gamma=[3], delta=[4], epsilon=['-1'],
        mu=[1], nu=['2/3'], xi=[5], zeta=['1/7']))


@pytest.fixture
def case2_spec():
    return close_jacobi(AlgebraSpec.build(
        tau=1, lam=3, beta=2, alpha=[1], gamma=['1/2'], delta=[3], epsilon=[2],
        mu=['-1'], nu=[1], xi=['2/5'], zeta=[1]))


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def random_quantum_spec():
    """Builder of seeded random closed quantum specs with a Casimir value and a pole-free offset."""
    def build(seed, case):
        rng = np.random.default_rng(seed)

        def draw():
            return sp.Rational(int(rng.integers(-6, 7)), int(rng.integers(1, 4)))

        values = dict(tau=draw(), lam=draw(), alpha=[draw()], gamma=[draw()], epsilon=[draw()],
                      mu=[draw()], nu=[draw()], xi=[draw()], zeta=[draw()])
        if case == 'case1':
            values['delta'] = [int(rng.integers(1, 5))**2]
        else:
            values['beta'] = sp.Rational(int(rng.choice([-3, -2, -1, 1, 2, 3])), int(rng.integers(1, 3)))
            values['delta'] = [draw()]
        # offsets in (0, 1) other than 1/2 keep every Case 2 site away from the poles of b and rho^2
        offset = sp.Rational(int(rng.integers(1, 7)), 7)
        return close_jacobi(AlgebraSpec.build(**values)), draw(), offset
    return build
