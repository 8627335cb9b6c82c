"""
Root conftest.py for the verification toolkit test suite.

Provides fixtures for the config class, the click runner, seeded
generators and factory resets.
"""

import logging
import os
import subprocess

import numpy as np
import pytest
from click.testing import CliRunner

# Load tests/envs.sh so ACCEPTANCE and other vars from that file apply (no need to source in shell)
_CONFTEST_DIR = os.path.dirname(os.path.abspath(__file__))
_ENVS_SH = os.path.join(_CONFTEST_DIR, "tests", "envs.sh")
if os.path.isfile(_ENVS_SH):
    try:
        _out = subprocess.run(
            ["bash", "-c", f"set -a && . '{_ENVS_SH}' && set +a && env -0"],
            capture_output=True,
            text=True,
            cwd=_CONFTEST_DIR,
            check=False,
        )
        if _out.returncode == 0 and _out.stdout:
            for _chunk in _out.stdout.split("\0"):
                if "=" in _chunk:
                    _k, _, _v = _chunk.partition("=")
                    os.environ.setdefault(_k, _v)
    except OSError:
        pass

# Set test environment before importing the package
os.environ['BIUNIV_SETTINGS'] = 'biuniv.config.TestingConfig'


from biuniv.config import TestingConfig
from biuniv.services.worker_factory import WorkerFactory


def _reset_all_factories():
    """Reset all singleton factories to clean state."""
    WorkerFactory.close()
    # handlers hold the stderr of the runner that configured them
    logging.getLogger("biuniv").handlers.clear()


@pytest.fixture
def reset_factories():
    """Reset factories before and after a test."""
    _reset_all_factories()
    yield
    _reset_all_factories()


@pytest.fixture
def config(reset_factories):
    """The testing config class, with the worker pool configured."""
    WorkerFactory.configure(TestingConfig)
    return TestingConfig


@pytest.fixture
def runner(reset_factories):
    """A click runner; stderr is kept apart from stdout."""
    return CliRunner()


@pytest.fixture
def rng():
    """A fixed-seed generator."""
    return np.random.default_rng(12345)
