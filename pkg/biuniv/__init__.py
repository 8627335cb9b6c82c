"""
Numerical verification toolkit for coefficient bounds of bi-univalent function classes
"""

import importlib
import logging
import os
import sys

from biuniv.services.worker_factory import WorkerFactory


DEFAULT_SETTINGS = 'biuniv.config.ProductionConfig'


def load_config(settings: str = None):
    """
    Resolve a dotted config class path, BIUNIV_SETTINGS by default

    Raises:
        ImportError / AttributeError: the path does not name a config class
    """
    path = settings or os.getenv('BIUNIV_SETTINGS') or DEFAULT_SETTINGS
    module_name, _, class_name = path.rpartition('.')
    return getattr(importlib.import_module(module_name), class_name)


def configure(settings: str = None):
    """
    configure Will load the config object, set up logging and the worker pool

    :param settings: Optional dotted path of the config class
    :return The config class
    """
    config = load_config(settings)

    logger = logging.getLogger('biuniv')
    if config.DEBUG:
        logger.setLevel(logging.DEBUG)
    else:
        logger.setLevel(getattr(logging, str(config.LOG_LEVEL), logging.INFO))

    # stdout carries the reports
    if not logger.handlers:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter('%(asctime)s %(levelname)s %(name)s: %(message)s'))
        logger.addHandler(handler)

    WorkerFactory.configure(config)

    return config
