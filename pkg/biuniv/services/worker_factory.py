"""
Worker Factory for managing the shared worker pool
"""

from biuniv.services.worker_service import WorkerService


class WorkerFactory:
    """
    Factory class for managing the worker service.
    Provides a singleton pattern for the pool.
    """

    _instance = None
    _configured = False

    @classmethod
    def configure(cls, config):
        """
        Configure the worker factory with a config object

        Args:
            config: Config class or object carrying THREADS
        """
        if not cls._configured:
            cls._instance = WorkerService(config)
            cls._configured = True

    @classmethod
    def get_service(cls) -> WorkerService:
        """
        Get the configured worker service instance

        Returns:
            WorkerService: Configured worker service instance

        Raises:
            RuntimeError: If factory is not configured
        """
        if not cls._configured or not cls._instance:
            raise RuntimeError("WorkerFactory not configured. Call configure() first.")

        return cls._instance

    @classmethod
    def map(cls, func, items) -> list:
        """Ordered map over the configured pool"""
        return cls.get_service().map(func, items)

    @classmethod
    def health_check(cls) -> dict:
        """
        Describe the worker pool

        Returns:
            dict: Health check results
        """
        try:
            return cls.get_service().health_check()
        except RuntimeError as e:
            return {
                'status': 'unavailable',
                'message': f'Worker pool not available: {str(e)}'
            }

    @classmethod
    def close(cls):
        """Shut the pool down and forget it"""
        if cls._instance:
            cls._instance.close()
        cls._instance = None
        cls._configured = False
