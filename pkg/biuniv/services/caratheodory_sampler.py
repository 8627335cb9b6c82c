"""
Sampling of admissible coefficient tuples and the functionals evaluated on them.

Carathéodory prefixes are drawn through the (c1, x, z) representation,
pushed through the coefficient systems of the class to (a2, a3, a4), and
accepted only when the induced prefix of the inverse-side function is
itself admissible. Schwarz prefixes are handled the same way for the
phi-general bounds. Every sampler has a scalar form that returns None on
rejection and a numpy form that works on whole batches.
"""

import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from biuniv.models.minda import (
    ADMISSIBILITY_TOLERANCE,
    CaratheodoryPrefix,
    ClassParams,
    GrenanderParams,
    MindaPhi,
    SchwarzPrefix,
    TaylorPrefix,
)


logger = logging.getLogger(__name__)

DEGENERATE_GAP = 1e-12


@dataclass(frozen=True)
class Admissibility:
    """Result of the coefficient-body membership test; slack >= 0 means the inequality holds."""
    admissible: bool
    slack_c1: float
    slack_x: float
    slack_z: float

    @property
    def violation(self) -> float:
        return max(0.0, -min(self.slack_c1, self.slack_x, self.slack_z))


@dataclass(frozen=True)
class AdmissiblePair:
    """An accepted draw: both auxiliary prefixes and the Taylor prefix they induce."""
    p_prefix: CaratheodoryPrefix
    q_prefix: tuple
    taylor: TaylorPrefix
    params: ClassParams


@dataclass(frozen=True)
class SchwarzOutcome:
    """a2, a3 and the induced second coefficient of the inverse-side Schwarz function."""
    a2: complex
    a3: complex
    s2: complex


@dataclass
class AcceptedBatch:
    """Accepted Carathéodory draws as arrays."""
    c1: np.ndarray
    c2: np.ndarray
    c3: np.ndarray
    d2: np.ndarray
    d3: np.ndarray
    a2: np.ndarray
    a3: np.ndarray
    a4: np.ndarray
    draws: int

    @property
    def accepted(self) -> int:
        return len(self.c1)

    @property
    def acceptance_rate(self) -> float:
        return self.accepted / self.draws if self.draws else 0.0


@dataclass
class SchwarzBatch:
    """Accepted Schwarz draws as arrays."""
    b1: np.ndarray
    b2: np.ndarray
    a2: np.ndarray
    a3: np.ndarray
    s2: np.ndarray
    draws: int

    @property
    def accepted(self) -> int:
        return len(self.b1)


def point_streams(seed: int, count: int, stream: int = 0) -> list:
    """
    Independent generators, one per lattice point.

    Generator i depends only on (seed, stream, i), never on worker count.
    """
    children = np.random.SeedSequence(seed, spawn_key=(stream,)).spawn(count)
    return [np.random.default_rng(child) for child in children]


def uniform_disk(rng: np.random.Generator, count: int, radius=1.0) -> np.ndarray:
    """Points uniform on the closed disk |w| <= radius (radius may be an array)."""
    r = np.sqrt(rng.random(count)) * radius
    angle = 2.0 * np.pi * rng.random(count)
    return r * np.exp(1j * angle)


def grenander_arrays(c1, x, z):
    """(c2, c3) from c1 and disk parameters x, z, broadcasting."""
    c1 = np.asarray(c1, dtype=float)
    x = np.asarray(x, dtype=complex)
    z = np.asarray(z, dtype=complex)
    gap = 4.0 - c1 ** 2
    c2 = (c1 ** 2 + x * gap) / 2.0
    c3 = (c1 ** 3 + 2.0 * c1 * gap * x - c1 * gap * x ** 2 + 2.0 * gap * (1.0 - np.abs(x) ** 2) * z) / 4.0
    return c2, c3


def grenander_prefix(c1: float, g: GrenanderParams) -> CaratheodoryPrefix:
    """The prefix (c1, c2, c3) represented by c1 and (x, z)."""
    prefix = CaratheodoryPrefix(c1=c1, c2=0j, c3=0j)
    if 4.0 - prefix.c1 ** 2 <= DEGENERATE_GAP:
        return CaratheodoryPrefix(c1=2.0, c2=2 + 0j, c3=2 + 0j)
    c2, c3 = grenander_arrays(prefix.c1, g.x, g.z)
    return CaratheodoryPrefix(c1=prefix.c1, c2=complex(c2), c3=complex(c3))


def admissibility_slacks(c1, c2, c3):
    """
    Slack of the three membership inequalities, broadcasting.

    c1 in [0, 2]; |2c2 - c1^2| <= 4 - c1^2; and with x = (2c2 - c1^2)/(4 - c1^2),
    |4c3 - c1^3 - 2c1(4 - c1^2)x + c1(4 - c1^2)x^2| <= 2(4 - c1^2)(1 - |x|^2).
    At c1 = 2 the prefix must be (2, 2, 2).
    """
    c1 = np.asarray(c1, dtype=float)
    c2 = np.asarray(c2, dtype=complex)
    c3 = np.asarray(c3, dtype=complex)
    gap = 4.0 - c1 ** 2
    degenerate = gap <= DEGENERATE_GAP

    slack_c1 = np.minimum(c1, 2.0 - c1)
    slack_x = gap - np.abs(2.0 * c2 - c1 ** 2)

    safe_gap = np.where(degenerate, 1.0, gap)
    x = (2.0 * c2 - c1 ** 2) / safe_gap
    lhs = np.abs(4.0 * c3 - c1 ** 3 - 2.0 * c1 * gap * x + c1 * gap * x ** 2)
    slack_z = 2.0 * gap * (1.0 - np.abs(x) ** 2) - lhs

    slack_x = np.where(degenerate, -np.abs(c2 - 2.0), slack_x)
    slack_z = np.where(degenerate, -np.abs(c3 - 2.0), slack_z)
    return slack_c1, slack_x, slack_z


def prefix_is_admissible(prefix: CaratheodoryPrefix,
                         tolerance: float = ADMISSIBILITY_TOLERANCE) -> Admissibility:
    """Membership of a rotated prefix in the Carathéodory coefficient body."""
    slack_c1, slack_x, slack_z = (float(value) for value in
                                  admissibility_slacks(prefix.c1, prefix.c2, prefix.c3))
    admissible = min(slack_c1, slack_x, slack_z) >= -tolerance
    return Admissibility(admissible=admissible, slack_c1=slack_c1, slack_x=slack_x, slack_z=slack_z)


def coefficient_system(c1, c2, c3, params: ClassParams):
    """
    Taylor prefix and inverse-side coefficients induced by a p-prefix, broadcasting.

    Returns:
        (a2, a3, a4, d2, d3); the inverse-side first coefficient is -c1
    """
    lam, u = params.lam, 1.0 - params.beta
    one_l, one_2l = 1.0 + lam, 1.0 + 2.0 * lam
    c1 = np.asarray(c1, dtype=complex)
    c2 = np.asarray(c2, dtype=complex)
    c3 = np.asarray(c3, dtype=complex)

    a2 = u / 2.0 * c1
    a3 = (u * c2 + 4.0 * lam * a2 ** 2) / (3.0 * one_l)
    a4 = (u * c3 + 18.0 * lam * a2 * a3 - 8.0 * lam * a2 ** 3) / (4.0 * one_2l)
    d2 = (2.0 * (3.0 + lam) * a2 ** 2 - 3.0 * one_l * a3) / u
    d3 = (2.0 * (10.0 + 11.0 * lam) * a2 * a3 - 4.0 * (5.0 + 3.0 * lam) * a2 ** 3 - 4.0 * one_2l * a4) / u
    return a2, a3, a4, d2, d3


def pair_from_prefix(p_prefix: CaratheodoryPrefix, params: ClassParams,
                     tolerance: float = ADMISSIBILITY_TOLERANCE) -> Optional[AdmissiblePair]:
    """The AdmissiblePair induced by p_prefix, or None if the q-side prefix is inadmissible."""
    a2, a3, a4, d2, d3 = (complex(value) for value in
                          coefficient_system(p_prefix.c1, p_prefix.c2, p_prefix.c3, params))

    # q(-w) has first coefficient c1 >= 0
    rotated = CaratheodoryPrefix(c1=p_prefix.c1, c2=d2, c3=-d3)
    if not prefix_is_admissible(rotated, tolerance).admissible:
        return None

    return AdmissiblePair(
        p_prefix=p_prefix,
        q_prefix=(complex(-p_prefix.c1), d2, d3),
        taylor=TaylorPrefix(a2=a2, a3=a3, a4=a4),
        params=params,
    )


def sample_pair(rng: np.random.Generator, params: ClassParams) -> Optional[AdmissiblePair]:
    """One draw of c1 ~ U[0, 2], x, z ~ U(disk); None when rejected."""
    c1 = float(2.0 * rng.random())
    x, z = uniform_disk(rng, 2)
    p_prefix = grenander_prefix(c1, GrenanderParams(x=complex(x), z=complex(z)))
    return pair_from_prefix(p_prefix, params)


def sample_grenander(rng: np.random.Generator, count: int):
    """Arrays (c1, c2, c3) of count prefixes drawn through the representation."""
    c1 = 2.0 * rng.random(count)
    x = uniform_disk(rng, count)
    z = uniform_disk(rng, count)
    c2, c3 = grenander_arrays(c1, x, z)
    return c1, c2, c3


def sample_pairs(rng: np.random.Generator, params: ClassParams, count: int,
                 batch_size: int = 50000, max_draws: Optional[int] = None,
                 tolerance: float = ADMISSIBILITY_TOLERANCE) -> AcceptedBatch:
    """
    Rejection-sample up to count accepted pairs.

    Draws proceed in batches of batch_size and stop once count pairs are
    accepted or max_draws draws were spent; the first count accepted draws
    are kept, so the result depends only on rng state and arguments.
    """
    max_draws = max_draws if max_draws is not None else 200 * count
    chunks = []
    accepted = 0
    draws = 0

    while accepted < count and draws < max_draws:
        size = min(batch_size, max_draws - draws)
        c1, c2, c3 = sample_grenander(rng, size)
        a2, a3, a4, d2, d3 = coefficient_system(c1, c2, c3, params)
        slacks = admissibility_slacks(c1, d2, -d3)
        mask = np.minimum.reduce(slacks) >= -tolerance

        draws += size
        if np.any(mask):
            chunks.append(tuple(array[mask] for array in (c1, c2, c3, d2, d3, a2, a3, a4)))
            accepted += int(np.count_nonzero(mask))

    if chunks:
        columns = [np.concatenate(parts)[:count] for parts in zip(*chunks)]
    else:
        columns = [np.empty(0, dtype=float)] + [np.empty(0, dtype=complex)] * 7

    batch = AcceptedBatch(*columns, draws=draws)
    logger.debug("lambda=%g beta=%g: accepted %d of %d draws", params.lam, params.beta,
                 batch.accepted, draws)
    return batch


def schwarz_arrays(b1, b2, phi: MindaPhi, lam: float):
    """
    a2, a3 and the induced s2 for Schwarz prefixes (b1, b2), broadcasting.

    Returns:
        (a2, a3, s2, admissible) where admissible means |s2| <= 1 - |b1|^2
    """
    b1 = np.asarray(b1, dtype=complex)
    b2 = np.asarray(b2, dtype=complex)
    a2 = phi.b1 * b1 / 2.0
    a3 = (phi.b1 * b2 + phi.b2 * b1 ** 2 + 4.0 * lam * a2 ** 2) / (3.0 * (1.0 + lam))
    s2 = (2.0 * (3.0 - lam) * phi.b1 ** 2 - 8.0 * phi.b2) * a2 ** 2 / phi.b1 ** 3 - b2
    admissible = np.abs(s2) <= 1.0 - np.abs(b1) ** 2 + ADMISSIBILITY_TOLERANCE
    return a2, a3, s2, admissible


def schwarz_pair(b: SchwarzPrefix, phi: MindaPhi, lam: float) -> Optional[SchwarzOutcome]:
    """(a2, a3, s2) induced by b, or None when the inverse-side prefix is inadmissible."""
    a2, a3, s2, admissible = schwarz_arrays(b.b1, b.b2, phi, lam)
    if not bool(admissible):
        return None
    return SchwarzOutcome(a2=complex(a2), a3=complex(a3), s2=complex(s2))


def a3_from_difference(a2, b2, s2, phi: MindaPhi, lam: float):
    """a3 = a2^2 + B1 (b2 - s2) / (6 (1 + lambda)), broadcasting."""
    return np.asarray(a2) ** 2 + phi.b1 * (np.asarray(b2) - np.asarray(s2)) / (6.0 * (1.0 + lam))


def sample_schwarz(rng: np.random.Generator, count: int):
    """b1 uniform on the unit disk, b2 uniform on the disk of radius 1 - |b1|^2."""
    b1 = uniform_disk(rng, count)
    b2 = uniform_disk(rng, count, 1.0 - np.abs(b1) ** 2)
    return b1, b2


def schwarz_pairs(rng: np.random.Generator, phi: MindaPhi, lam: float, count: int,
                  batch_size: int = 50000, max_draws: Optional[int] = None) -> SchwarzBatch:
    """Rejection-sample up to count accepted Schwarz draws."""
    max_draws = max_draws if max_draws is not None else 200 * count
    chunks = []
    accepted = 0
    draws = 0

    while accepted < count and draws < max_draws:
        size = min(batch_size, max_draws - draws)
        b1, b2 = sample_schwarz(rng, size)
        a2, a3, s2, mask = schwarz_arrays(b1, b2, phi, lam)
        draws += size
        if np.any(mask):
            chunks.append(tuple(array[mask] for array in (b1, b2, a2, a3, s2)))
            accepted += int(np.count_nonzero(mask))

    if chunks:
        columns = [np.concatenate(parts)[:count] for parts in zip(*chunks)]
    else:
        columns = [np.empty(0, dtype=complex)] * 5
    return SchwarzBatch(*columns, draws=draws)


def hankel2_functional(t: TaylorPrefix) -> float:
    """|a2 a4 - a3^2|."""
    return abs(t.a2 * t.a4 - t.a3 ** 2)


def hankel2_arrays(a2, a3, a4):
    """|a2 a4 - a3^2|, broadcasting."""
    return np.abs(np.asarray(a2) * np.asarray(a4) - np.asarray(a3) ** 2)


def fekete_functional(t: TaylorPrefix, delta: float) -> float:
    """|a3 - delta a2^2|."""
    return abs(t.a3 - delta * t.a2 ** 2)


def fekete_arrays(a2, a3, delta: float):
    """|a3 - delta a2^2|, broadcasting."""
    return np.abs(np.asarray(a3) - delta * np.asarray(a2) ** 2)


def system_residual_arrays(c1, c2, c3, d2, d3, a2, a3, a4, params: ClassParams):
    """
    Largest residual per draw of the six defining equations, the combined
    a3/a4 formulas and the expanded Hankel expression.
    """
    lam, u = params.lam, 1.0 - params.beta
    one_l, one_2l = 1.0 + lam, 1.0 + 2.0 * lam
    c1 = np.asarray(c1, dtype=complex)
    d1 = -c1
    diff2, diff3 = c2 - d2, c3 - d3

    residuals = [
        2.0 * a2 - u * c1,
        3.0 * one_l * a3 - 4.0 * lam * a2 ** 2 - u * c2,
        4.0 * one_2l * a4 - 18.0 * lam * a2 * a3 + 8.0 * lam * a2 ** 3 - u * c3,
        -2.0 * a2 - u * d1,
        2.0 * (3.0 + lam) * a2 ** 2 - 3.0 * one_l * a3 - u * d2,
        2.0 * (10.0 + 11.0 * lam) * a2 * a3 - 4.0 * (5.0 + 3.0 * lam) * a2 ** 3 - 4.0 * one_2l * a4 - u * d3,
        a3 - (u ** 2 / 4.0 * c1 ** 2 + u / (6.0 * one_l) * diff2),
        a4 - (5.0 * lam * u ** 3 / (16.0 * one_2l) * c1 ** 3 + 5.0 * u ** 2 / (24.0 * one_l) * c1 * diff2
              + u / (8.0 * one_2l) * diff3),
        a2 * a4 - a3 ** 2 - ((lam - 2.0) * u ** 4 / (32.0 * one_2l) * c1 ** 4
                             + u ** 3 / (48.0 * one_l) * c1 ** 2 * diff2
                             + u ** 2 / (16.0 * one_2l) * c1 * diff3
                             - u ** 2 / (36.0 * one_l ** 2) * diff2 ** 2),
    ]
    return np.max(np.abs(np.stack(residuals)), axis=0)


def system_residuals(pair: AdmissiblePair) -> float:
    """Largest residual of the defining equations at one accepted pair."""
    p, (_, d2, d3), t = pair.p_prefix, pair.q_prefix, pair.taylor
    return float(system_residual_arrays(p.c1, p.c2, p.c3, d2, d3, t.a2, t.a3, t.a4, pair.params))
