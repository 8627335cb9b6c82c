"""
Acceptance fixtures: full-scale runs with the production config.

Enable with ACCEPTANCE=1 (see tests/envs.sh). Expect several minutes.
"""

import os

import pytest

from biuniv.config import ProductionConfig
from biuniv.models.run_config import RunConfigModel
from biuniv.services.worker_factory import WorkerFactory
from conftest import _reset_all_factories


def _require_acceptance_env():
    """Skip if the acceptance toggle is not set."""
    if os.environ.get("ACCEPTANCE") != "1":
        pytest.skip("Acceptance tests require ACCEPTANCE=1 (e.g. ACCEPTANCE=1 pytest tests/acceptance)")


def pytest_collection_modifyitems(items):
    for item in items:
        if "tests/acceptance" in str(item.fspath).replace(os.sep, "/"):
            item.add_marker(pytest.mark.acceptance)


@pytest.fixture(autouse=True)
def production():
    """ProductionConfig with the worker pool configured; skip unless ACCEPTANCE=1."""
    _require_acceptance_env()
    _reset_all_factories()
    WorkerFactory.configure(ProductionConfig)
    yield ProductionConfig
    _reset_all_factories()


@pytest.fixture
def default_run(production):
    """Default grids, resolution and sample count, seed 42."""
    return RunConfigModel(production).build({"command": "verify", "seed": 42})
