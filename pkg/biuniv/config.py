"""
Configuration objects for the verification toolkit.
Sets the data that can be accessed with config.KEY
"""

import os


def _env_int(name, default):
    """Read a non-negative int from the environment, falling back to default."""
    raw = os.environ.get(name)
    if raw is None or raw.strip() == '':
        return default
    try:
        value = int(raw)
    except ValueError:
        return default
    return value if value >= 0 else default


class BaseConfig:
    # pylint: disable=too-few-public-methods
    """Base configuration"""

    DEBUG = False
    LOG_LEVEL = os.environ.get('BIUNIV_LOG_LEVEL', 'INFO').upper()

    # Worker pool, 0 means one worker per cpu
    THREADS = _env_int('BIUNIV_THREADS', 0)

    # Run defaults
    DEFAULT_SEED = _env_int('BIUNIV_SEED', 42)
    DEFAULT_RESOLUTION = 0.005
    DEFAULT_SAMPLES = 100000
    DEFAULT_LAMBDA_GRID = '0:1:0.25'
    DEFAULT_BETA_GRID = '0:0.8:0.2'

    # Proof lattice
    SIGN_LATTICE_C_STEP = 0.01
    SIGN_LATTICE_LAMBDA_STEP = 0.1
    SIGN_LATTICE_BETA_STEP = 0.05
    CORNER_RESOLUTION = 0.05

    # Sampler
    SAMPLE_BATCH_SIZE = 50000
    MAX_SAMPLE_DRAWS_FACTOR = 200

    # Tolerances
    BOUND_SLACK = 1e-9
    ADMISSIBILITY_TOLERANCE = 1e-12
    CONTINUITY_TOLERANCE = 1e-8
    CONTINUITY_LAMBDA_STEP = 0.01
    SYSTEM_TOLERANCE = 1e-10


class DevelopmentConfig(BaseConfig):
    # pylint: disable=too-few-public-methods
    """Development configuration"""

    DEBUG = True
    LOG_LEVEL = 'DEBUG'


class TestingConfig(BaseConfig):
    # pylint: disable=too-few-public-methods
    """Testing configuration, small enough for the unit suite"""

    DEFAULT_SAMPLES = 2000
    DEFAULT_RESOLUTION = 0.01
    SIGN_LATTICE_C_STEP = 0.05
    SAMPLE_BATCH_SIZE = 5000
    THREADS = 2


class ProductionConfig(BaseConfig):
    # pylint: disable=too-few-public-methods
    """Production configuration"""

    DEBUG = False
