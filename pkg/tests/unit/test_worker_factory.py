"""Tests for biuniv.services.worker_factory and worker_service modules."""

import threading

import pytest

from biuniv.services.worker_factory import WorkerFactory
from biuniv.services.worker_service import WorkerService
from conftest import _reset_all_factories


@pytest.fixture(autouse=True)
def clean_factory():
    """Reset WorkerFactory before and after each test in this module."""
    _reset_all_factories()
    yield
    _reset_all_factories()


class ThreadConfig:
    # pylint: disable=too-few-public-methods
    THREADS = 4


class SingleThreadConfig:
    # pylint: disable=too-few-public-methods
    THREADS = 1


class TestWorkerService:

    def test_resolve_zero_threads(self, mocker):
        mocker.patch("biuniv.services.worker_service.os.cpu_count", return_value=6)
        assert WorkerService._resolve_threads(0) == 6

    def test_resolve_unknown_cpu_count(self, mocker):
        mocker.patch("biuniv.services.worker_service.os.cpu_count", return_value=None)
        assert WorkerService._resolve_threads(0) == 1

    def test_resolve_explicit(self):
        assert WorkerService._resolve_threads(3) == 3

    def test_map_keeps_order(self):
        service = WorkerService(ThreadConfig)
        try:
            assert service.map(lambda x: x * x, range(50)) == [x * x for x in range(50)]
        finally:
            service.close()

    def test_single_thread_runs_inline(self):
        service = WorkerService(SingleThreadConfig)
        names = service.map(lambda _: threading.current_thread().name, range(3))
        assert set(names) == {threading.current_thread().name}
        assert service.health_check()["status"] == "idle"

    def test_exception_propagates(self):
        service = WorkerService(ThreadConfig)

        def fail(item):
            if item == 2:
                raise ArithmeticError("boom")
            return item

        try:
            with pytest.raises(ArithmeticError, match="boom"):
                service.map(fail, range(5))
        finally:
            service.close()

    def test_health_check_running(self):
        service = WorkerService(ThreadConfig)
        service.start()
        assert service.health_check() == {"status": "running", "threads": 4}
        service.close()
        assert service.health_check()["status"] == "idle"


class TestWorkerFactory:

    def test_not_configured(self):
        with pytest.raises(RuntimeError, match="WorkerFactory not configured"):
            WorkerFactory.get_service()

    def test_configure_once(self):
        WorkerFactory.configure(ThreadConfig)
        service = WorkerFactory.get_service()
        WorkerFactory.configure(SingleThreadConfig)
        assert WorkerFactory.get_service() is service
        assert service.threads == 4

    def test_map(self):
        WorkerFactory.configure(ThreadConfig)
        assert WorkerFactory.map(str, [3, 1, 2]) == ["3", "1", "2"]

    def test_health_check_unavailable(self):
        result = WorkerFactory.health_check()
        assert result["status"] == "unavailable"
        assert "not configured" in result["message"]

    def test_health_check_configured(self):
        WorkerFactory.configure(ThreadConfig)
        assert WorkerFactory.health_check()["threads"] == 4

    def test_close_resets(self):
        WorkerFactory.configure(ThreadConfig)
        WorkerFactory.close()
        assert WorkerFactory._instance is None
        assert WorkerFactory._configured is False
