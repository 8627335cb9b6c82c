"""
Validation utilities for parameters and run settings
"""
import math
import numbers

from biuniv.helpers.error import DomainError


def validate_finite(value, name: str):
    """
    Validate that a real or complex number is finite

    Args:
        value: Number to validate
        name: Field name used in the error message

    Returns:
        The value unchanged

    Raises:
        DomainError: If value is not a number or not finite
    """
    if isinstance(value, bool) or not isinstance(value, numbers.Number):
        raise DomainError(f"{name} must be a number")

    parts = (value.real, value.imag) if isinstance(value, complex) else (value,)
    if not all(math.isfinite(float(part)) for part in parts):
        raise DomainError(f"{name} must be finite")

    return value


def validate_real_range(value, name: str, low: float, high: float, *, high_open: bool = False,
                        low_open: bool = False) -> float:
    """
    Validate a real number against an interval

    Args:
        value: Number to validate
        name: Field name used in the error message
        low: Lower end of the interval
        high: Upper end of the interval
        high_open: True if the upper end is excluded
        low_open: True if the lower end is excluded

    Returns:
        The value as float

    Raises:
        DomainError: If value is outside the interval
    """
    validate_finite(value, name)
    if isinstance(value, complex):
        raise DomainError(f"{name} must be real")
    value = float(value)

    below = value <= low if low_open else value < low
    above = value >= high if high_open else value > high
    if below or above:
        left = "(" if low_open else "["
        right = ")" if high_open else "]"
        raise DomainError(f"{name} must lie in {left}{low:g}, {high:g}{right}, got {value:g}")

    return value


def validate_lambda(value) -> float:
    """Validate the convex-combination weight, 0 <= lambda <= 1."""
    return validate_real_range(value, "lambda", 0.0, 1.0)


def validate_beta(value) -> float:
    """Validate the order, 0 <= beta < 1."""
    return validate_real_range(value, "beta", 0.0, 1.0, high_open=True)


def validate_c(value) -> float:
    """Validate the first Caratheodory coefficient, 0 <= c <= 2."""
    return validate_real_range(value, "c", 0.0, 2.0)


def validate_gamma(value, name: str = "gamma") -> float:
    """Validate a square coordinate, 0 <= gamma <= 1."""
    return validate_real_range(value, name, 0.0, 1.0)


def validate_disk(value, name: str, radius: float = 1.0, tolerance: float = 0.0) -> complex:
    """
    Validate that a complex number lies in the closed disk of the given radius

    Raises:
        DomainError: If |value| exceeds radius + tolerance
    """
    validate_finite(value, name)
    value = complex(value)
    if abs(value) > radius + tolerance:
        raise DomainError(f"|{name}| must be at most {radius:g}, got {abs(value):g}")
    return value


def validate_resolution(value, maximum: float) -> float:
    """
    Validate a grid step

    Raises:
        DomainError: If the step is not positive or exceeds the maximum
    """
    validate_finite(value, "resolution")
    value = float(value)
    if value <= 0:
        raise DomainError("resolution must be positive")
    if value > maximum:
        raise DomainError(f"resolution exceeds maximum of {maximum:g}")
    return value


def validate_samples(value) -> int:
    """
    Validate a sample count

    Raises:
        DomainError: If the count is not a positive integer
    """
    if isinstance(value, bool) or not isinstance(value, numbers.Integral):
        raise DomainError("samples must be an integer")
    if value <= 0:
        raise DomainError("samples must be positive")
    return int(value)
