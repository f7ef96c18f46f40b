import os
from dotenv import load_dotenv

load_dotenv()


def _float_pair(name, default):
    raw = os.environ.get(name)
    if not raw:
        return default
    low, high = raw.split(',')
    return (float(low), float(high))


class Config:
    # Logging
    LOG_LEVEL = os.environ.get('LOG_LEVEL', 'INFO')
    LOG_FILE = os.environ.get('LOG_FILE')

    # Exact root isolation
    ROOT_WIDTH = float(os.environ.get('ROOT_WIDTH', '1e-12'))

    # Fock-space constraint solver
    ENERGY_WINDOW = _float_pair('ENERGY_WINDOW', (-1000.0, 1000.0))
    P_MAX = int(os.environ.get('P_MAX', '4'))
    VERIFY_TOL = float(os.environ.get('VERIFY_TOL', '1e-9'))

    # Finite-difference cross-check
    GRID_POINTS = int(os.environ.get('GRID_POINTS', '4000'))
    CLUSTER_TOL = float(os.environ.get('CLUSTER_TOL', '5e-3'))
    X_DOMAIN = _float_pair('X_DOMAIN', (1e-3, 25.0))
    Y_DOMAIN = _float_pair('Y_DOMAIN', (-25.0, 25.0))
    BOUNDARY_DECAY = 1e-6


class TestConfig(Config):
    LOG_LEVEL = 'DEBUG'
    P_MAX = 2
    GRID_POINTS = 2000
