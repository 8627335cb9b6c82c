"""
Brute-force maximizers that re-derive the maxima of the Hankel argument.

Each search is a dense grid over a box followed by a single refinement pass
at step/100 around the grid argmax. Nothing here reads the closed forms;
the objectives are evaluated from T1..T4 and the quartic K directly.
"""

import logging
from dataclasses import dataclass

import numpy as np

from biuniv.helpers.validation import validate_c, validate_resolution
from biuniv.models.minda import ClassParams
from biuniv.services.proof_pipeline import k_assembled, t_arrays


logger = logging.getLogger(__name__)

MAX_SQUARE_RESOLUTION = 0.05
MAX_INTERVAL_RESOLUTION = 0.01
TIE_TOLERANCE = 1e-12
REFINEMENT_FACTOR = 100


@dataclass(frozen=True)
class OptResult:
    """Outcome of one grid search."""
    max_value: float
    argmax: tuple
    resolution: float
    refined: bool
    coarse_value: float = None


def box_grid(low: float, high: float, resolution: float) -> np.ndarray:
    """Grid over [low, high] including both ends, step at most resolution."""
    count = int(np.ceil((high - low) / resolution - 1e-9)) + 1
    return np.linspace(low, high, count)


def refinement_grid(center: float, low: float, high: float, step: float) -> np.ndarray:
    """Points center + k*step/100, |k| <= 100, kept inside [low, high]; center is always included."""
    fine = step / REFINEMENT_FACTOR
    points = center + fine * np.arange(-REFINEMENT_FACTOR, REFINEMENT_FACTOR + 1)
    return points[(points >= low) & (points <= high)]


def _pick(values: np.ndarray) -> int:
    """Flat index of the lexicographically smallest point within TIE_TOLERANCE of the max."""
    best = np.max(values)
    return int(np.flatnonzero(values >= best - TIE_TOLERANCE)[0])


def _square_objective(coefficients, g1, g2):
    t1, t2, t3, t4 = coefficients
    return t1 + t2 * (g1 + g2) + t3 * (g1 ** 2 + g2 ** 2) + t4 * (g1 + g2) ** 2


def _square_search(coefficients, step):
    axis = box_grid(0.0, 1.0, step)
    g1, g2 = np.meshgrid(axis, axis, indexing="ij")
    values = _square_objective(coefficients, g1, g2)
    index = np.unravel_index(_pick(values), values.shape)
    coarse = (float(axis[index[0]]), float(axis[index[1]]))
    coarse_value = float(_square_objective(coefficients, *coarse))

    fine1 = refinement_grid(coarse[0], 0.0, 1.0, step)
    fine2 = refinement_grid(coarse[1], 0.0, 1.0, step)
    f1, f2 = np.meshgrid(fine1, fine2, indexing="ij")
    fine_values = _square_objective(coefficients, f1, f2)
    fine_index = np.unravel_index(_pick(fine_values), fine_values.shape)
    refined = (float(fine1[fine_index[0]]), float(fine2[fine_index[1]]))
    refined_value = float(_square_objective(coefficients, *refined))

    if refined_value < coarse_value:
        return coarse_value, coarse, coarse_value
    return refined_value, refined, coarse_value


def maximize_f_on_square(c: float, params: ClassParams, resolution: float) -> OptResult:
    """Maximum of F(gamma1, gamma2) over [0, 1]^2 at fixed c."""
    c = validate_c(c)
    resolution = validate_resolution(resolution, MAX_SQUARE_RESOLUTION)
    coefficients = tuple(float(value) for value in t_arrays(c, params.lam, params.beta))

    value, argmax, coarse_value = _square_search(coefficients, resolution)
    return OptResult(max_value=value, argmax=argmax, resolution=resolution, refined=True,
                     coarse_value=coarse_value)


def square_grid_maxima(c_values, params: ClassParams, resolution: float):
    """
    Grid maximum of F over [0, 1]^2 for many c at once, without refinement.

    Returns:
        (max_values, gamma1, gamma2) arrays, one entry per c
    """
    resolution = validate_resolution(resolution, MAX_SQUARE_RESOLUTION)
    c = np.asarray(c_values, dtype=float)[:, None]
    axis = box_grid(0.0, 1.0, resolution)
    g1, g2 = (grid.ravel()[None, :] for grid in np.meshgrid(axis, axis, indexing="ij"))

    values = _square_objective(t_arrays(c, params.lam, params.beta), g1, g2)
    best = np.max(values, axis=1)
    index = np.argmax(values >= best[:, None] - TIE_TOLERANCE, axis=1)
    return best, g1[0, index], g2[0, index]


def _interval_search(objective, step):
    axis = box_grid(0.0, 2.0, step)
    values = objective(axis)
    coarse = float(axis[_pick(values)])
    coarse_value = float(objective(np.array([coarse]))[0])

    fine = refinement_grid(coarse, 0.0, 2.0, step)
    fine_values = objective(fine)
    refined = float(fine[_pick(fine_values)])
    refined_value = float(objective(np.array([refined]))[0])

    if refined_value < coarse_value:
        return coarse_value, coarse, coarse_value
    return refined_value, refined, coarse_value


def maximize_k_on_interval(params: ClassParams, resolution: float) -> OptResult:
    """Maximum of K(c) = F(1, 1) over c in [0, 2]."""
    resolution = validate_resolution(resolution, MAX_INTERVAL_RESOLUTION)

    def objective(c):
        return k_assembled(c, params.lam, params.beta)

    value, argmax, coarse_value = _interval_search(objective, resolution)
    return OptResult(max_value=value, argmax=(argmax,), resolution=resolution, refined=True,
                     coarse_value=coarse_value)


def hankel_bound_oracle(params: ClassParams, resolution: float) -> OptResult:
    """
    sup over c in [0, 2] of the square maximum of F.

    The square search runs at the same step as the c search.
    """
    resolution = validate_resolution(resolution, MAX_INTERVAL_RESOLUTION)
    argmax_by_c = {}

    def objective(c_values):
        out = np.empty(len(c_values))
        for i, c in enumerate(c_values):
            coefficients = tuple(float(value) for value in t_arrays(c, params.lam, params.beta))
            out[i], argmax_by_c[float(c)], _ = _square_search(coefficients, resolution)
        return out

    value, c_best, coarse_value = _interval_search(objective, resolution)
    gamma = argmax_by_c[c_best]
    logger.debug("oracle at lambda=%g beta=%g: %.12g at c=%.6f", params.lam, params.beta, value, c_best)
    return OptResult(max_value=value, argmax=(c_best, gamma[0], gamma[1]), resolution=resolution,
                     refined=True, coarse_value=coarse_value)


def oracle_tolerance(resolution: float) -> float:
    """Allowed gap between the oracle and the closed form."""
    return 5.0 * resolution ** 2 + 1e-8
