"""
Parser for the a:b:step grid syntax of the command line
"""

import numpy as np

from biuniv.helpers.error import ConfigurationError, DomainError


def lattice(start: float, stop: float, step: float) -> np.ndarray:
    """
    Inclusive arithmetic grid start, start+step, ..., stop

    Points are computed as start + i*step and rounded to 12 decimals so that
    0.1-style steps land exactly on their decimal values.

    Raises:
        DomainError: If step is not positive or stop < start
    """
    if step <= 0:
        raise DomainError("grid step must be positive")
    if stop < start:
        raise DomainError("grid end must not be smaller than its start")

    count = int(np.floor((stop - start) / step + 1e-9)) + 1
    points = np.round(start + step * np.arange(count), 12)
    return np.minimum(points, stop)


def parse_grid(text: str, name: str, validator=None) -> tuple:
    """
    Parse a grid given as 'a:b:step' (or a single value)

    Args:
        text: The grid text
        name: Option name used in error messages
        validator: Optional callable applied to every point

    Returns:
        Tuple of floats in increasing order

    Raises:
        ConfigurationError: If the text is malformed or a point is outside its domain
    """
    if text is None or not str(text).strip():
        raise ConfigurationError(f"{name} cannot be empty")

    parts = str(text).strip().split(":")
    try:
        numbers = [float(part) for part in parts]
    except ValueError as exc:
        raise ConfigurationError(f"{name} must look like a:b:step, got '{text}'") from exc

    try:
        if len(numbers) == 1:
            points = np.array(numbers)
        elif len(numbers) == 3:
            points = lattice(numbers[0], numbers[1], numbers[2])
        else:
            raise ConfigurationError(f"{name} must look like a:b:step, got '{text}'")

        values = tuple(float(point) for point in points)
        if validator is not None:
            values = tuple(validator(value) for value in values)
    except DomainError as exc:
        raise ConfigurationError(f"{name}: {exc}") from exc

    return values
