"""
Closed-form coefficient bounds for the class G^lambda_sigma(phi).

Every function returns a BoundReport tagged with the branch of the
piecewise formula that produced the value. Ties at a switch point go to
the branch written first.
"""

import math
from dataclasses import dataclass

from biuniv.helpers.error import DegenerateDenominatorError, DomainError
from biuniv.helpers.validation import validate_beta, validate_lambda
from biuniv.models.minda import BoundReport, ClassParams, MindaPhi, special_phi


DENOMINATOR_EPSILON = 1e-12

COROLLARY_KINDS = ("H-beta", "K-beta", "H", "K")

# Switch point of the lambda = 0 corollary
H_BETA_THRESHOLD = (11.0 - math.sqrt(37.0)) / 12.0


@dataclass(frozen=True)
class ThresholdPair:
    """The two beta switch points of the Hankel bound, clamped to [0, 1)."""
    theorem: float
    proof: float
    theorem_raw: float
    proof_raw: float

    @property
    def theorem_clamped(self) -> bool:
        return self.theorem != self.theorem_raw

    @property
    def proof_clamped(self) -> bool:
        return self.proof != self.proof_raw


def _clamp_unit(value: float) -> float:
    return min(max(value, 0.0), math.nextafter(1.0, 0.0))


def fekete_delta(lam: float) -> float:
    """The Fekete-Szego parameter delta = 4 lambda / (3 + 3 lambda)."""
    lam = validate_lambda(lam)
    return 4.0 * lam / (3.0 + 3.0 * lam)


def _a2_squared(phi: MindaPhi, lam: float) -> float:
    return phi.b1 ** 3 / (4.0 * phi.b1 + abs((3.0 - lam) * phi.b1 ** 2 - 4.0 * phi.b2))


def a2_bound(phi: MindaPhi, lam: float) -> BoundReport:
    """|a2| <= B1 sqrt(B1) / sqrt(4 B1 + |(3 - lambda) B1^2 - 4 B2|)."""
    lam = validate_lambda(lam)
    return BoundReport(value=math.sqrt(_a2_squared(phi, lam)), branch="single")


def a3_bound(phi: MindaPhi, lam: float) -> BoundReport:
    """|a3| bound, switching at B1 = 4 / (3 (1 + lambda))."""
    lam = validate_lambda(lam)
    threshold = 4.0 / (3.0 * (1.0 + lam))
    base = phi.b1 / (3.0 * (1.0 + lam))

    if phi.b1 >= threshold:
        value = (1.0 - threshold / phi.b1) * _a2_squared(phi, lam) + base
        return BoundReport(value=value, branch="large-B1", threshold=threshold)
    return BoundReport(value=base, branch="small-B1", threshold=threshold)


def convex_coefficient_bounds(phi: MindaPhi):
    """
    |a2| and |a3| bounds for the bi-convex case lambda = 1.

    The small-B1 branch is B1 / 6: lambda = 1 is substituted in both branches.
    """
    return a2_bound(phi, 1.0), a3_bound(phi, 1.0)


def fekete_a2_bound(phi: MindaPhi, lam: float) -> BoundReport:
    """|a2| <= sqrt(max(B1, |B2|) / (3 - lambda))."""
    lam = validate_lambda(lam)
    if abs(phi.b2) <= phi.b1:
        return BoundReport(value=math.sqrt(phi.b1 / (3.0 - lam)), branch="b2-within-b1", threshold=phi.b1)
    return BoundReport(value=math.sqrt(abs(phi.b2) / (3.0 - lam)), branch="b2-exceeds-b1", threshold=phi.b1)


def fekete_functional_bound(phi: MindaPhi, lam: float) -> BoundReport:
    """|a3 - delta a2^2| <= max(B1, |B2|) / (3 + 3 lambda) at delta = 4 lambda / (3 + 3 lambda)."""
    lam = validate_lambda(lam)
    delta = fekete_delta(lam)
    if abs(phi.b2) <= phi.b1:
        return BoundReport(value=phi.b1 / (3.0 + 3.0 * lam), branch="b2-within-b1",
                           threshold=phi.b1, delta=delta)
    return BoundReport(value=abs(phi.b2) / (3.0 + 3.0 * lam), branch="b2-exceeds-b1",
                       threshold=phi.b1, delta=delta)


def special_fekete_bounds(kind: str, param: float, lam: float):
    """
    The Fekete-Szego bounds for the two special phi, from their own formulas.

    Returns:
        (|a2| bound, |a3 - delta a2^2| bound) as BoundReports
    """
    lam = validate_lambda(lam)
    # validates kind and param
    special_phi(kind, param)
    weight = 2.0 * param if kind == "power" else 2.0 * (1.0 - param)

    a2 = BoundReport(value=math.sqrt(weight / (3.0 - lam)), branch=kind)
    functional = BoundReport(value=weight / (3.0 + 3.0 * lam), branch=kind, delta=fekete_delta(lam))
    return a2, functional


def beta_threshold(lam: float) -> ThresholdPair:
    """
    The beta switch points of the Hankel bound.

    theorem: where the critical point of K reaches c = 2 (operative switch)
    proof: where the leading coefficient of K changes sign
    """
    lam = validate_lambda(lam)
    one_l, one_2l, two_l = 1.0 + lam, 1.0 + 2.0 * lam, 2.0 - lam

    theorem = 1.0 - (one_2l + math.sqrt(one_2l ** 2 + 18.0 * one_l ** 2 * two_l)) / (6.0 * one_l * two_l)
    proof = 1.0 - (one_2l + math.sqrt(one_2l ** 2 + two_l * (18.0 * one_l ** 2 - 8.0 * one_2l))) \
        / (3.0 * one_l * two_l)

    return ThresholdPair(
        theorem=_clamp_unit(theorem),
        proof=_clamp_unit(proof),
        theorem_raw=theorem,
        proof_raw=proof,
    )


def boundary_value(params: ClassParams) -> float:
    """K(2) = (1 - beta)^2 / (2 (1 + 2 lambda)) [(2 - lambda)(1 - beta)^2 + 1]."""
    lam, u = params.lam, 1.0 - params.beta
    return u ** 2 / (2.0 * (1.0 + 2.0 * lam)) * ((2.0 - lam) * u ** 2 + 1.0)


def interior_denominator(params: ClassParams) -> float:
    """Leading coefficient of the quartic K, up to a positive factor."""
    lam, u = params.lam, 1.0 - params.beta
    one_l, one_2l = 1.0 + lam, 1.0 + 2.0 * lam
    return 9.0 * one_l ** 2 * (2.0 - lam) * u ** 2 - 6.0 * one_l * one_2l * u \
        + 8.0 * one_2l - 18.0 * one_l ** 2


def interior_value(params: ClassParams) -> float:
    """
    K at its interior critical point.

    Raises:
        DegenerateDenominatorError: the denominator vanishes
    """
    lam, u = params.lam, 1.0 - params.beta
    one_l, one_2l, two_l = 1.0 + lam, 1.0 + 2.0 * lam, 2.0 - lam

    numerator = 36.0 * (8.0 * one_2l * two_l - one_2l ** 2) * u ** 2 \
        - 324.0 * one_l * one_2l * u + 288.0 * one_2l - 729.0 * one_l ** 2
    denominator = interior_denominator(params)
    if abs(denominator) < DENOMINATOR_EPSILON:
        raise DegenerateDenominatorError(
            f"interior denominator vanishes at lambda={params.lam:g}, beta={params.beta:g}")

    return u ** 2 / (72.0 * one_2l) * numerator / denominator


def hankel2_bound(params: ClassParams) -> BoundReport:
    """Bound on |a2 a4 - a3^2| over G^lambda_sigma(beta)."""
    threshold = beta_threshold(params.lam).theorem
    if params.beta <= threshold:
        return BoundReport(value=boundary_value(params), branch="boundary-case", threshold=threshold)
    return BoundReport(value=interior_value(params), branch="interior-case", threshold=threshold)


def corollary_bounds(params: ClassParams, which: str) -> BoundReport:
    """
    The special-case Hankel bounds, evaluated from their own printed formulas.

    H-beta: lambda = 0; K-beta: lambda = 1; H and K additionally beta = 0.

    Raises:
        DomainError: params do not match the requested special case
    """
    if which not in COROLLARY_KINDS:
        raise DomainError(f"which must be one of: {', '.join(COROLLARY_KINDS)}")

    required_lam = 0.0 if which in ("H-beta", "H") else 1.0
    if params.lam != required_lam:
        raise DomainError(f"{which} requires lambda={required_lam:g}, got {params.lam:g}")
    if which in ("H", "K") and params.beta != 0.0:
        raise DomainError(f"{which} requires beta=0, got {params.beta:g}")

    beta = validate_beta(params.beta)
    if which == "H":
        return BoundReport(value=1.5, branch="boundary-case")
    if which == "K":
        return BoundReport(value=1.0 / 3.0, branch="boundary-case")

    u = 1.0 - beta
    if which == "H-beta":
        if beta <= H_BETA_THRESHOLD:
            return BoundReport(value=u ** 2 * (1.0 + 2.0 * u ** 2) / 2.0,
                               branch="boundary-case", threshold=H_BETA_THRESHOLD)
        value = u ** 2 * (60.0 * beta ** 2 - 84.0 * beta - 25.0) / (16.0 * (9.0 * beta ** 2 - 15.0 * beta + 1.0))
        return BoundReport(value=value, branch="interior-case", threshold=H_BETA_THRESHOLD)

    value = u ** 2 / 24.0 * (5.0 * beta ** 2 + 8.0 * beta - 32.0) / (3.0 * beta ** 2 - 3.0 * beta - 4.0)
    branch = "boundary-case" if beta == 0.0 else "interior-case"
    return BoundReport(value=value, branch=branch, threshold=0.0)
