"""Domain types shared by every module, and the series operations on them.

All types are frozen dataclasses; every operation here is pure.
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np
from numpy.polynomial import polynomial as P

from biuniv.helpers.error import DomainError
from biuniv.helpers.validation import (
    validate_beta,
    validate_disk,
    validate_finite,
    validate_lambda,
    validate_real_range,
)


ADMISSIBILITY_TOLERANCE = 1e-12

PHI_KINDS = ("linear-order", "power")


@dataclass(frozen=True)
class MindaPhi:
    """Taylor data (B1, B2, B3) of the subordinating function phi.

    B3 is carried along but none of the implemented bounds read it.
    """
    b1: float
    b2: float
    b3: float = 0.0

    def __post_init__(self):
        for name in ("b1", "b2", "b3"):
            value = validate_finite(getattr(self, name), name)
            if isinstance(value, complex):
                raise DomainError(f"{name} must be real")
        if self.b1 <= 0:
            raise DomainError(f"b1 must be positive, got {self.b1:g}")


@dataclass(frozen=True)
class ClassParams:
    """The pair (lambda, beta) selecting the subclass."""
    lam: float
    beta: float

    def __post_init__(self):
        object.__setattr__(self, "lam", validate_lambda(self.lam))
        object.__setattr__(self, "beta", validate_beta(self.beta))


@dataclass(frozen=True)
class TaylorPrefix:
    """Coefficients (a2, a3, a4) of f(z) = z + a2 z^2 + a3 z^3 + a4 z^4 + ..."""
    a2: complex
    a3: complex
    a4: complex = 0j

    def __post_init__(self):
        for name in ("a2", "a3", "a4"):
            object.__setattr__(self, name, complex(validate_finite(getattr(self, name), name)))


@dataclass(frozen=True)
class InverseCoeffs:
    """Coefficients of the inverse map g(w) = w + a2 w^2 + a3 w^3 + a4 w^4 + ..."""
    a2: complex
    a3: complex
    a4: complex


@dataclass(frozen=True)
class SchwarzPrefix:
    """First two coefficients of a Schwarz function."""
    b1: complex
    b2: complex

    def __post_init__(self):
        b1 = validate_disk(self.b1, "b1", 1.0, ADMISSIBILITY_TOLERANCE)
        radius = max(0.0, 1.0 - abs(b1) ** 2)
        b2 = validate_disk(self.b2, "b2", radius, ADMISSIBILITY_TOLERANCE)
        object.__setattr__(self, "b1", b1)
        object.__setattr__(self, "b2", b2)


@dataclass(frozen=True)
class CaratheodoryPrefix:
    """First coefficients of a function with positive real part, rotated so c1 is in [0, 2].

    Construction only checks c1; membership of (c2, c3) in the coefficient
    body is decided by prefix_is_admissible.
    """
    c1: float
    c2: complex
    c3: complex

    def __post_init__(self):
        c1 = self.c1
        if isinstance(c1, complex):
            if abs(c1.imag) > ADMISSIBILITY_TOLERANCE:
                raise DomainError("c1 must be real")
            c1 = c1.real
        object.__setattr__(self, "c1", validate_real_range(c1, "c1", 0.0, 2.0))
        object.__setattr__(self, "c2", complex(validate_finite(self.c2, "c2")))
        object.__setattr__(self, "c3", complex(validate_finite(self.c3, "c3")))


@dataclass(frozen=True)
class GrenanderParams:
    """Free disk parameters (x, z) of the c2/c3 representation."""
    x: complex
    z: complex

    def __post_init__(self):
        object.__setattr__(self, "x", validate_disk(self.x, "x", 1.0, ADMISSIBILITY_TOLERANCE))
        object.__setattr__(self, "z", validate_disk(self.z, "z", 1.0, ADMISSIBILITY_TOLERANCE))


@dataclass(frozen=True)
class BoundReport:
    """A computed bound and the piecewise branch that produced it."""
    value: float
    branch: str
    threshold: Optional[float] = None
    delta: Optional[float] = None

    def __post_init__(self):
        validate_finite(self.value, "value")
        if self.value < 0:
            raise DomainError(f"bound value must be nonnegative, got {self.value:g}")


def inverse_prefix(t: TaylorPrefix) -> InverseCoeffs:
    """Coefficients of f^{-1} through order 4."""
    a2, a3, a4 = t.a2, t.a3, t.a4
    return InverseCoeffs(
        a2=-a2,
        a3=2 * a2 ** 2 - a3,
        a4=-(5 * a2 ** 3 - 5 * a2 * a3 + a4),
    )


def _truncate(coefficients, order):
    out = np.zeros(order + 1, dtype=complex)
    head = np.asarray(coefficients, dtype=complex)[:order + 1]
    out[:len(head)] = head
    return out


def compose_truncated(outer, inner, order: int = 4):
    """
    Coefficients of outer(inner(z)) through z^order.

    Both series are given lowest degree first; inner must have no constant term.
    """
    inner = _truncate(inner, order)
    if inner[0] != 0:
        raise DomainError("inner series must vanish at 0")
    outer = _truncate(outer, order)

    result = np.zeros(order + 1, dtype=complex)
    result[0] = outer[0]
    power = np.array([1.0 + 0j])
    for k in range(1, order + 1):
        power = _truncate(P.polymul(power, inner), order)
        result += outer[k] * power
    return result


def composition_residuals(t: TaylorPrefix):
    """Coefficients of z^2, z^3, z^4 in g(f(z)); all vanish when g inverts f."""
    g = inverse_prefix(t)
    f_series = [0, 1, t.a2, t.a3, t.a4]
    g_series = [0, 1, g.a2, g.a3, g.a4]
    composed = compose_truncated(g_series, f_series, 4)
    return tuple(complex(value) for value in composed[2:])


def special_phi(kind: str, param: float) -> MindaPhi:
    """
    The two special choices of phi.

    linear-order(beta): (1 + (1 - 2 beta) z) / (1 - z), 0 <= beta < 1
    power(beta): ((1 + z) / (1 - z)) ** beta, 0 < beta <= 1

    Raises:
        DomainError: unknown kind or param outside its range
    """
    if kind == "linear-order":
        beta = validate_beta(param)
        coefficient = 2.0 * (1.0 - beta)
        return MindaPhi(b1=coefficient, b2=coefficient, b3=coefficient)
    if kind == "power":
        beta = validate_real_range(param, "param", 0.0, 1.0, low_open=True)
        return MindaPhi(
            b1=2.0 * beta,
            b2=2.0 * beta ** 2,
            b3=(2.0 * beta + 4.0 * beta ** 3) / 3.0,
        )
    raise DomainError(f"phi kind must be one of: {', '.join(PHI_KINDS)}")


def schwarz_from_caratheodory(p1, p2):
    """(b1, b2) of (p - 1) / (p + 1) for p = 1 + p1 z + p2 z^2 + ..., broadcasting over arrays."""
    p1 = np.asarray(p1, dtype=complex)
    p2 = np.asarray(p2, dtype=complex)
    b1 = p1 / 2.0
    b2 = (p2 - p1 ** 2 / 2.0) / 2.0
    if b1.ndim == 0 and b2.ndim == 0:
        return complex(b1), complex(b2)
    return b1, b2
