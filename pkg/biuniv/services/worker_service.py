"""
Worker pool used to spread lattice points over threads
"""

import logging
import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List


class WorkerService:
    """
    Thread pool wrapper whose map always returns results in submission order,
    so reports do not depend on how many workers ran them.
    """

    def __init__(self, config):
        self.config = config
        self.threads = self._resolve_threads(getattr(config, 'THREADS', 0))
        self._executor = None
        self._logger = logging.getLogger(__name__)

    @staticmethod
    def _resolve_threads(threads: int) -> int:
        """0 means one worker per cpu."""
        if not threads or threads < 0:
            return os.cpu_count() or 1
        return int(threads)

    def start(self):
        """Create the executor if it is not running yet"""
        if self._executor is None:
            self._executor = ThreadPoolExecutor(max_workers=self.threads, thread_name_prefix='biuniv')
            self._logger.debug("worker pool started with %d threads", self.threads)

    def map(self, func: Callable, items: Iterable) -> List:
        """
        Apply func to every item

        Args:
            func: Callable taking one item
            items: The work items

        Returns:
            list: Results in the order of items
        """
        items = list(items)
        if self.threads == 1 or len(items) <= 1:
            return [func(item) for item in items]

        self.start()
        futures = [self._executor.submit(func, item) for item in items]
        # result() re-raises the first worker exception in order
        return [future.result() for future in futures]

    def health_check(self) -> dict:
        """Describe the pool"""
        return {
            'status': 'running' if self._executor is not None else 'idle',
            'threads': self.threads,
        }

    def close(self):
        """Shut the executor down"""
        if self._executor is not None:
            self._executor.shutdown(wait=True)
            self._executor = None
