"""Base check class: turns residual arrays into report rows."""

import logging

import numpy as np

from biuniv.helpers.report_helper import make_check_row


logger = logging.getLogger(__name__)


class BaseCheck:
    """Base class of every verification check.

    Residual convention: a point passes when residual <= tolerance (< for
    strict claims). Points with residual -inf are outside the claim's scope
    and are not counted; NaN counts as a failure.
    """
    name = None  # Should be set in subclasses

    def __init__(self, config, run_config=None):
        if not self.name:
            raise ValueError("Subclasses must define name")
        self.config = config
        self.run_config = run_config

    def rows(self) -> list:
        """Run the check and return its report rows"""
        raise NotImplementedError

    @staticmethod
    def summarize(name: str, residual, coordinates: dict, tolerance: float = 0.0,
                  strict: bool = False) -> dict:
        """
        Reduce a residual array to one report row

        Args:
            name: Row name
            residual: Array of residuals, any shape
            coordinates: Arrays broadcastable to the residual shape, keyed by coordinate name
            tolerance: Allowed residual
            strict: Require residual < tolerance instead of <=

        Returns:
            dict: A check row with the worst residual and its coordinates
        """
        residual = np.asarray(residual, dtype=float)
        flat = np.where(np.isnan(residual), np.inf, residual).ravel()
        in_scope = flat != -np.inf
        points = int(np.count_nonzero(in_scope))

        if points == 0:
            logger.info("%s: no points in scope", name)
            return make_check_row(name, True, 0, None, None)

        index = int(np.argmax(flat))
        worst = float(flat[index])
        passed = worst < tolerance if strict else worst <= tolerance
        witness = {key: float(np.real(np.broadcast_to(value, residual.shape).ravel()[index]))
                   for key, value in coordinates.items()}

        if passed:
            logger.info("%s: passed on %d points, worst residual %.3g", name, points, worst)
        else:
            logger.error("%s: failed, worst residual %.3g at %s", name, worst, witness)
        return make_check_row(name, passed, points, worst, witness)

    def from_claim(self, claim) -> dict:
        """Row for a LatticeClaim"""
        return self.summarize(claim.name, claim.residual, claim.coordinates, claim.tolerance, claim.strict)
