"""
Executable form of the Hankel-bound argument.

The objective F over the square, its edge functions G and H, the quartic
K(c) = F(1, 1) and its critical point are all computed here so that each
claim of the argument can be checked numerically. The *_arrays functions
broadcast over numpy inputs; the scalar functions validate their domains.
"""

import logging
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from biuniv.helpers.error import InconsistencyError
from biuniv.helpers.validation import validate_c, validate_gamma
from biuniv.models.minda import ClassParams
from biuniv.services.closed_form_bounds import beta_threshold


logger = logging.getLogger(__name__)

CONSISTENCY_TOLERANCE = 1e-12
FINITE_DIFFERENCE_STEP = 1e-5
SECOND_DIFFERENCE_STEP = 1e-3


@dataclass(frozen=True)
class ProofCoefficients:
    """T1..T4 at one (c, params)."""
    t1: float
    t2: float
    t3: float
    t4: float
    c: float
    params: ClassParams


@dataclass(frozen=True)
class CaseClassification:
    """Predicted argmax of K and which case of the argument produced it."""
    argmax: float
    case_tag: str


@dataclass(frozen=True)
class LatticeClaim:
    """Residuals of one claim over a lattice; a claim holds where residual <= 0 (< 0 if strict)."""
    name: str
    residual: np.ndarray
    coordinates: dict
    strict: bool = False
    tolerance: float = 0.0


def t_arrays(c, lam, beta):
    """T1..T4, broadcasting over c, lambda and beta."""
    c = np.asarray(c, dtype=float)
    lam = np.asarray(lam, dtype=float)
    u = 1.0 - np.asarray(beta, dtype=float)
    one_l, one_2l = 1.0 + lam, 1.0 + 2.0 * lam
    edge = 4.0 - c ** 2

    t1 = (2.0 - lam) * u ** 4 / (32.0 * one_2l) * c ** 4 + u ** 2 * c ** 4 / (32.0 * one_2l) \
        + u ** 2 * c * edge / (16.0 * one_2l)
    t2 = u ** 3 * c ** 2 * edge / (96.0 * one_l) + u ** 2 * c ** 2 * edge / (32.0 * one_2l)
    t3 = u ** 2 * c ** 2 * edge / (64.0 * one_2l) - u ** 2 * c * edge / (32.0 * one_2l)
    t4 = u ** 2 * edge ** 2 / (144.0 * one_l ** 2)
    return t1, t2, t3, t4


def _k_parts(lam, beta):
    lam = np.asarray(lam, dtype=float)
    u = 1.0 - np.asarray(beta, dtype=float)
    one_l, one_2l = 1.0 + lam, 1.0 + 2.0 * lam
    leading = 9.0 * u ** 2 * one_l ** 2 * (2.0 - lam) - 6.0 * u * one_l * one_2l - 18.0 * one_l ** 2 + 8.0 * one_2l
    middle = 24.0 * u * one_l * one_2l + 108.0 * one_l ** 2 - 64.0 * one_2l
    scale = u ** 2 / (288.0 * one_l ** 2 * one_2l)
    return scale, leading, middle, 128.0 * one_2l


def k_polynomial(c, lam, beta):
    """The expanded quartic K(c), broadcasting."""
    c = np.asarray(c, dtype=float)
    scale, leading, middle, constant = _k_parts(lam, beta)
    return scale * (leading * c ** 4 + middle * c ** 2 + constant)


def k_prime_polynomial(c, lam, beta):
    """The cubic K'(c), broadcasting."""
    c = np.asarray(c, dtype=float)
    scale, leading, middle, _ = _k_parts(lam, beta)
    return 4.0 * scale * (leading * c ** 3 + middle / 2.0 * c)


def k_assembled(c, lam, beta):
    """K(c) as F(1, 1) = T1 + 2 T2 + 2 T3 + 4 T4, broadcasting."""
    t1, t2, t3, t4 = t_arrays(c, lam, beta)
    return t1 + 2.0 * t2 + 2.0 * t3 + 4.0 * t4


def t_coefficients(c: float, params: ClassParams) -> ProofCoefficients:
    """T1..T4 at c in [0, 2]."""
    c = validate_c(c)
    t1, t2, t3, t4 = (float(value) for value in t_arrays(c, params.lam, params.beta))
    return ProofCoefficients(t1=t1, t2=t2, t3=t3, t4=t4, c=c, params=params)


def f_value(g1: float, g2: float, c: float, params: ClassParams) -> float:
    """F(g1, g2) = T1 + T2 (g1 + g2) + T3 (g1^2 + g2^2) + T4 (g1 + g2)^2."""
    g1 = validate_gamma(g1, "gamma1")
    g2 = validate_gamma(g2, "gamma2")
    t = t_coefficients(c, params)
    return t.t1 + t.t2 * (g1 + g2) + t.t3 * (g1 ** 2 + g2 ** 2) + t.t4 * (g1 + g2) ** 2


def g_edge(gamma: float, c: float, params: ClassParams) -> float:
    """F(0, gamma)."""
    gamma = validate_gamma(gamma)
    t = t_coefficients(c, params)
    return t.t1 + t.t2 * gamma + (t.t3 + t.t4) * gamma ** 2


def h_edge(gamma: float, c: float, params: ClassParams) -> float:
    """F(1, gamma)."""
    gamma = validate_gamma(gamma)
    t = t_coefficients(c, params)
    return (t.t3 + t.t4) * gamma ** 2 + (t.t2 + 2.0 * t.t4) * gamma + t.t1 + t.t2 + t.t3 + t.t4


def k_values(c: float, params: ClassParams):
    """
    K(c) and K'(c).

    Raises:
        InconsistencyError: the expanded quartic and T1 + 2T2 + 2T3 + 4T4 disagree
    """
    c = validate_c(c)
    k = float(k_polynomial(c, params.lam, params.beta))
    assembled = float(k_assembled(c, params.lam, params.beta))
    if abs(k - assembled) > CONSISTENCY_TOLERANCE * max(1.0, abs(k)):
        raise InconsistencyError(
            f"K polynomial {k!r} differs from F(1,1) {assembled!r} at c={c:g}, "
            f"lambda={params.lam:g}, beta={params.beta:g}")
    return k, float(k_prime_polynomial(c, params.lam, params.beta))


def k_second_derivative(c: float, params: ClassParams, step: float = SECOND_DIFFERENCE_STEP) -> float:
    """Central second difference of K at c."""
    lam, beta = params.lam, params.beta
    return float((k_polynomial(c + step, lam, beta) - 2.0 * k_polynomial(c, lam, beta)
                  + k_polynomial(c - step, lam, beta)) / step ** 2)


def critical_point(params: ClassParams) -> Optional[float]:
    """The nonzero real critical point of K, or None when it does not exist."""
    lam, u = params.lam, 1.0 - params.beta
    one_l, one_2l = 1.0 + lam, 1.0 + 2.0 * lam

    numerator = -12.0 * one_l * one_2l * u - 54.0 * one_l ** 2 + 32.0 * one_2l
    _, denominator, _, _ = _k_parts(lam, params.beta)
    denominator = float(denominator)
    if denominator == 0.0:
        return None

    radicand = numerator / denominator
    if not math.isfinite(radicand) or radicand < 0.0:
        return None
    return math.sqrt(radicand)


def case_classification(params: ClassParams) -> CaseClassification:
    """
    Where K attains its maximum on [0, 2].

    Raises:
        InconsistencyError: the interior case applies but K has no critical point
    """
    if params.beta <= beta_threshold(params.lam).theorem:
        return CaseClassification(argmax=2.0, case_tag="boundary")

    point = critical_point(params)
    if point is None:
        raise InconsistencyError(
            f"interior case without a critical point at lambda={params.lam:g}, beta={params.beta:g}")
    return CaseClassification(argmax=point, case_tag="interior")


def subcase_label(params: ClassParams) -> str:
    """
    Which mechanism of the case analysis applies.

    monotone: leading coefficient of K is nonnegative, K increases on (0, 2)
    critical-outside: the critical point lies at or beyond c = 2
    critical-inside: the critical point lies in (0, 2)
    """
    thresholds = beta_threshold(params.lam)
    if params.beta <= thresholds.proof_raw:
        return "monotone"
    if params.beta <= thresholds.theorem:
        return "critical-outside"
    return "critical-inside"


def sign_lattice_scan(c_values, lam_values, beta_values) -> list:
    """
    Residuals of every sign claim of the argument over a (c, lambda, beta) lattice.

    Returns:
        List of LatticeClaim, one per claim
    """
    c = np.asarray(c_values, dtype=float)[:, None, None]
    lam = np.asarray(lam_values, dtype=float)[None, :, None]
    beta = np.asarray(beta_values, dtype=float)[None, None, :]
    shape = np.broadcast_shapes(c.shape, lam.shape, beta.shape)
    coordinates = {
        "c": np.broadcast_to(c, shape),
        "lambda": np.broadcast_to(lam, shape),
        "beta": np.broadcast_to(beta, shape),
    }

    t1, t2, t3, t4 = (np.broadcast_to(value, shape) for value in t_arrays(c, lam, beta))
    interior = (coordinates["c"] > 0.0) & (coordinates["c"] < 2.0)

    k_poly = np.broadcast_to(k_polynomial(c, lam, beta), shape)
    k_sum = np.broadcast_to(k_assembled(c, lam, beta), shape)
    h = FINITE_DIFFERENCE_STEP
    difference = (k_polynomial(c + h, lam, beta) - k_polynomial(c - h, lam, beta)) / (2.0 * h)
    derivative_gap = np.abs(np.broadcast_to(k_prime_polynomial(c, lam, beta) - difference, shape))

    def _interior_only(values):
        return np.where(interior, values, -np.inf)

    claims = [
        LatticeClaim("t1-nonnegative", -t1, coordinates),
        LatticeClaim("t2-nonnegative", -t2, coordinates),
        LatticeClaim("t3-nonpositive", t3, coordinates),
        LatticeClaim("t4-nonnegative", -t4, coordinates),
        LatticeClaim("t3-plus-2t4-positive", _interior_only(-(t3 + 2.0 * t4)), coordinates, strict=True),
        LatticeClaim("edge-ordering", -(t2 + t3 + 3.0 * t4), coordinates),
        LatticeClaim("edge-g-increasing", -(t2 + 2.0 * (t3 + t4)), coordinates),
        LatticeClaim("k-consistency", np.abs(k_poly - k_sum), coordinates,
                     tolerance=CONSISTENCY_TOLERANCE),
        LatticeClaim("k-prime-difference", _interior_only(derivative_gap), coordinates, tolerance=1e-6),
    ]
    logger.debug("scanned %d lattice points", int(np.prod(shape)))
    return claims


def case_lattice_scan(lam_values, beta_values) -> list:
    """
    Residuals of the per-(lambda, beta) claims: the case mechanism and K'' < 0 at the critical point.

    Returns:
        List of LatticeClaim
    """
    lam_grid, beta_grid = np.meshgrid(np.asarray(lam_values, dtype=float),
                                      np.asarray(beta_values, dtype=float), indexing="ij")
    mechanism = np.full(lam_grid.shape, -np.inf)
    concavity = np.full(lam_grid.shape, -np.inf)

    for index in np.ndindex(lam_grid.shape):
        params = ClassParams(lam=float(lam_grid[index]), beta=float(beta_grid[index]))
        label = subcase_label(params)
        point = critical_point(params)
        _, leading, _, _ = _k_parts(params.lam, params.beta)

        if label == "monotone":
            mechanism[index] = -float(leading)
        elif label == "critical-outside":
            mechanism[index] = -1.0 if point is None else 2.0 - point
        else:
            mechanism[index] = np.inf if point is None else point - 2.0
            if point is not None:
                concavity[index] = k_second_derivative(point, params)

    coordinates = {"lambda": lam_grid, "beta": beta_grid}
    return [
        LatticeClaim("case-mechanism", mechanism, coordinates, tolerance=1e-9),
        LatticeClaim("k-concave-at-critical-point", concavity, coordinates, strict=True),
    ]
