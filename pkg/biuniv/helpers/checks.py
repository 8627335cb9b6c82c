"""
The verification suite run by the verify command.

Each check class reduces one family of residuals to report rows. Per-point
work goes through the worker pool; rows come back in a fixed order.
"""

import logging

import numpy as np

from biuniv.base.base_check import BaseCheck
from biuniv.helpers.grid_parser import lattice
from biuniv.models.minda import (
    ClassParams,
    MindaPhi,
    TaylorPrefix,
    composition_residuals,
    schwarz_from_caratheodory,
    special_phi,
)
from biuniv.services import caratheodory_sampler as sampler
from biuniv.services.closed_form_bounds import (
    a2_bound,
    a3_bound,
    beta_threshold,
    boundary_value,
    corollary_bounds,
    fekete_a2_bound,
    fekete_delta,
    fekete_functional_bound,
    hankel2_bound,
    interior_value,
    special_fekete_bounds,
)
from biuniv.services.oracle_optimizer import (
    hankel_bound_oracle,
    maximize_k_on_interval,
    oracle_tolerance,
    square_grid_maxima,
)
from biuniv.services.proof_pipeline import case_classification, case_lattice_scan, k_assembled, sign_lattice_scan
from biuniv.services.worker_factory import WorkerFactory


logger = logging.getLogger(__name__)

STREAM_CARATHEODORY = 0
STREAM_SCHWARZ = 1
STREAM_GRENANDER = 2
STREAM_INVERSE = 3
STREAM_CARATHEODORY_SCHWARZ = 4

ARGMAX_TOLERANCE = 0.01
EXACT_TOLERANCE = 1e-12
COROLLARY_TOLERANCE = 1e-10
INVERSE_SAMPLES = 1000

# |B2| > B1
WIDE_PHI = MindaPhi(b1=1.0, b2=3.0)


def proof_lattice(config):
    """(c, lambda, beta) axes of the proof lattice; beta stops one step short of 1."""
    beta_step = config.SIGN_LATTICE_BETA_STEP
    return (
        lattice(0.0, 2.0, config.SIGN_LATTICE_C_STEP),
        lattice(0.0, 1.0, config.SIGN_LATTICE_LAMBDA_STEP),
        lattice(0.0, 1.0 - beta_step, beta_step),
    )


def phi_cases(run_config) -> list:
    """(lambda, beta, phi) per run point: the run's phi, then WIDE_PHI unless the run already uses it."""
    cases = []
    for lam, beta in run_config.points:
        phi = run_config.phi_for(beta)
        cases.append((lam, beta, phi))
        if phi != WIDE_PHI:
            cases.append((lam, beta, WIDE_PHI))
    return cases


def _concat(parts, key):
    return np.concatenate([part[key] for part in parts]) if parts else np.empty(0)


class ProofSignCheck(BaseCheck):
    """Every sign claim of the Hankel argument over the proof lattice."""
    name = "proof-signs"

    def rows(self) -> list:
        c_values, lam_values, beta_values = proof_lattice(self.config)
        claims = sign_lattice_scan(c_values, lam_values, beta_values)
        claims += case_lattice_scan(lam_values, beta_values)
        return [self.from_claim(claim) for claim in claims]


def _corner_point(item):
    lam, beta, c_values, resolution = item
    params = ClassParams(lam=lam, beta=beta)
    best, _, _ = square_grid_maxima(c_values, params, resolution)
    corner = k_assembled(c_values, lam, beta)
    return (best - corner) / np.maximum(1.0, np.abs(corner))


class CornerDominanceCheck(BaseCheck):
    """The grid maximum of F over the square sits at (1, 1) for every interior c."""
    name = "corner-dominance"

    def rows(self) -> list:
        c_values, lam_values, beta_values = proof_lattice(self.config)
        c_values = c_values[(c_values > 0.0) & (c_values < 2.0)]
        pairs = [(lam, beta) for lam in lam_values for beta in beta_values]
        items = [(lam, beta, c_values, self.config.CORNER_RESOLUTION) for lam, beta in pairs]

        residual = np.stack(WorkerFactory.map(_corner_point, items))
        coordinates = {
            "lambda": np.array([lam for lam, _ in pairs])[:, None],
            "beta": np.array([beta for _, beta in pairs])[:, None],
            "c": c_values[None, :],
        }
        return [self.summarize(self.name, residual, coordinates, tolerance=EXACT_TOLERANCE)]


class BranchContinuityCheck(BaseCheck):
    """Both Hankel branches agree at the operative threshold."""
    name = "branch-continuity"

    def rows(self) -> list:
        lam_values = lattice(0.0, 1.0, self.config.CONTINUITY_LAMBDA_STEP)
        residual = np.empty(len(lam_values))
        beta_at = np.empty(len(lam_values))

        # a clamped threshold is evaluated at the clamp, beta = 0 at lambda = 1
        for i, lam in enumerate(lam_values):
            beta_at[i] = beta_threshold(lam).theorem
            params = ClassParams(lam=lam, beta=beta_at[i])
            residual[i] = abs(boundary_value(params) - interior_value(params))

        coordinates = {"lambda": np.asarray(lam_values), "beta": beta_at}
        return [self.summarize(self.name, residual, coordinates, tolerance=self.config.CONTINUITY_TOLERANCE)]


class CorollaryConsistencyCheck(BaseCheck):
    """The general Hankel bound against the printed special cases."""
    name = "corollary-consistency"

    def rows(self) -> list:
        betas = lattice(0.0, 0.99, 0.01)
        rows = []
        for lam, which in ((0.0, "H-beta"), (1.0, "K-beta")):
            residual = np.array([
                abs(hankel2_bound(ClassParams(lam, beta)).value
                    - corollary_bounds(ClassParams(lam, beta), which).value)
                for beta in betas
            ])
            rows.append(self.summarize(f"corollary-{which.lower()}", residual,
                                       {"lambda": lam, "beta": betas}, tolerance=COROLLARY_TOLERANCE))

        exact = np.array([
            abs(hankel2_bound(ClassParams(0.0, 0.0)).value - 1.5),
            abs(hankel2_bound(ClassParams(1.0, 0.0)).value - 1.0 / 3.0),
            abs(interior_value(ClassParams(1.0, 0.0)) - 1.0 / 3.0),
            abs(corollary_bounds(ClassParams(0.0, 0.0), "H").value - 1.5),
            abs(corollary_bounds(ClassParams(1.0, 0.0), "K").value - 1.0 / 3.0),
            abs(beta_threshold(0.0).theorem - (11.0 - np.sqrt(37.0)) / 12.0),
        ])
        rows.append(self.summarize("corollary-exact-values", exact,
                                   {"case": np.arange(len(exact))}, tolerance=EXACT_TOLERANCE))
        return rows


class SpecialPhiCheck(BaseCheck):
    """Printed Fekete-Szego specialisations against the general formulas."""
    name = "special-phi-consistency"

    def rows(self) -> list:
        _, lam_values, beta_values = proof_lattice(self.config)
        params_by_kind = {
            "linear-order": beta_values,
            "power": beta_values[beta_values > 0.0].tolist() + [1.0],
        }

        residual, lams, kinds, params = [], [], [], []
        for kind_index, (kind, values) in enumerate(params_by_kind.items()):
            for lam in lam_values:
                for param in values:
                    phi = special_phi(kind, param)
                    a2, functional = special_fekete_bounds(kind, param, lam)
                    residual.append(max(abs(a2.value - fekete_a2_bound(phi, lam).value),
                                        abs(functional.value - fekete_functional_bound(phi, lam).value)))
                    lams.append(lam)
                    kinds.append(kind_index)
                    params.append(param)

        coordinates = {"kind": np.array(kinds), "lambda": np.array(lams), "param": np.array(params)}
        return [self.summarize(self.name, np.array(residual), coordinates, tolerance=EXACT_TOLERANCE)]


def _oracle_point(item):
    lam, beta, resolution = item
    params = ClassParams(lam=lam, beta=beta)
    bound = hankel2_bound(params).value
    oracle = hankel_bound_oracle(params, resolution)
    k_max = maximize_k_on_interval(params, resolution)
    predicted = case_classification(params)
    logger.info("oracle lambda=%g beta=%g: %.12g vs bound %.12g", lam, beta, oracle.max_value, bound)
    return {
        "agreement": abs(oracle.max_value - bound) - oracle_tolerance(resolution),
        "location": abs(k_max.argmax[0] - predicted.argmax) - ARGMAX_TOLERANCE,
        "c": oracle.argmax[0],
        "argmax": k_max.argmax[0],
    }


class OracleAgreementCheck(BaseCheck):
    """Brute-force maxima against the closed form and the predicted argmax."""
    name = "oracle-agreement"

    def rows(self) -> list:
        run = self.run_config
        points = run.points
        results = WorkerFactory.map(_oracle_point, [(lam, beta, run.resolution) for lam, beta in points])

        lams = np.array([lam for lam, _ in points])
        betas = np.array([beta for _, beta in points])
        agreement = np.array([result["agreement"] for result in results])
        location = np.array([result["location"] for result in results])
        return [
            self.summarize(self.name, agreement,
                           {"lambda": lams, "beta": betas, "c": np.array([r["c"] for r in results])}),
            self.summarize("argmax-location", location,
                           {"lambda": lams, "beta": betas, "c": np.array([r["argmax"] for r in results])}),
        ]


def sampler_point(item):
    """
    Sample one lattice point and evaluate the Hankel functional on it

    Returns:
        dict of per-draw arrays plus the bound, empirical maximum and counts
    """
    lam, beta, rng, samples, config = item
    params = ClassParams(lam=lam, beta=beta)
    batch = sampler.sample_pairs(rng, params, samples, batch_size=config.SAMPLE_BATCH_SIZE,
                                 max_draws=config.MAX_SAMPLE_DRAWS_FACTOR * samples,
                                 tolerance=config.ADMISSIBILITY_TOLERANCE)
    bound = hankel2_bound(params).value
    hankel = sampler.hankel2_arrays(batch.a2, batch.a3, batch.a4)
    system = sampler.system_residual_arrays(batch.c1, batch.c2, batch.c3, batch.d2, batch.d3,
                                            batch.a2, batch.a3, batch.a4, params)

    if batch.accepted < samples:
        logger.warning("lambda=%g beta=%g: only %d of %d samples accepted after %d draws",
                       lam, beta, batch.accepted, samples, batch.draws)
    logger.info("lambda=%g beta=%g: acceptance rate %.4f", lam, beta, batch.acceptance_rate)

    return {
        "lambda": np.full(batch.accepted, lam),
        "beta": np.full(batch.accepted, beta),
        "c1": batch.c1,
        "hankel": hankel - bound,
        "system": system,
        "bound": bound,
        "empirical_max": float(np.max(hankel)) if batch.accepted else None,
        "accepted": batch.accepted,
    }


class SamplerHankelCheck(BaseCheck):
    """One-sided Hankel check and equation residuals on sampled coefficient tuples."""
    name = "sampler-hankel-bound"

    def rows(self) -> list:
        run = self.run_config
        points = run.points
        streams = sampler.point_streams(run.seed, len(points), STREAM_CARATHEODORY)
        items = [(lam, beta, rng, run.samples, self.config) for (lam, beta), rng in zip(points, streams)]
        parts = WorkerFactory.map(sampler_point, items)

        coordinates = {key: _concat(parts, key) for key in ("lambda", "beta", "c1")}
        return [
            self.summarize(self.name, _concat(parts, "hankel"), coordinates,
                           tolerance=self.config.BOUND_SLACK),
            self.summarize("sampler-system-consistency", _concat(parts, "system"), coordinates,
                           tolerance=self.config.SYSTEM_TOLERANCE),
        ]


def _schwarz_point(item):
    lam, beta, phi, rng, samples, config = item
    batch = sampler.schwarz_pairs(rng, phi, lam, samples, batch_size=config.SAMPLE_BATCH_SIZE,
                                  max_draws=config.MAX_SAMPLE_DRAWS_FACTOR * samples)
    a2_abs = np.abs(batch.a2)
    identity = np.abs(batch.a3 - sampler.a3_from_difference(batch.a2, batch.b2, batch.s2, phi, lam))
    logger.info("lambda=%g beta=%g: %d of %d Schwarz draws accepted", lam, beta, batch.accepted, batch.draws)

    return {
        "lambda": np.full(batch.accepted, lam),
        "beta": np.full(batch.accepted, beta),
        "phi_b1": np.full(batch.accepted, phi.b1),
        "phi_b2": np.full(batch.accepted, phi.b2),
        "b1": np.abs(batch.b1),
        "schwarz-a2-bound": a2_abs - a2_bound(phi, lam).value,
        "schwarz-a3-bound": np.abs(batch.a3) - a3_bound(phi, lam).value,
        "schwarz-fekete-a2-bound": a2_abs - fekete_a2_bound(phi, lam).value,
        "schwarz-fekete-functional-bound": sampler.fekete_arrays(batch.a2, batch.a3, fekete_delta(lam))
        - fekete_functional_bound(phi, lam).value,
        "schwarz-a3-identity": identity,
    }


class SchwarzBoundsCheck(BaseCheck):
    """The phi-general coefficient bounds on sampled Schwarz prefixes."""
    name = "schwarz-bounds"

    BOUND_ROWS = ("schwarz-a2-bound", "schwarz-a3-bound", "schwarz-fekete-a2-bound",
                  "schwarz-fekete-functional-bound")

    def rows(self) -> list:
        run = self.run_config
        cases = phi_cases(run)
        streams = sampler.point_streams(run.seed, len(cases), STREAM_SCHWARZ)
        items = [(lam, beta, phi, rng, run.samples, self.config)
                 for (lam, beta, phi), rng in zip(cases, streams)]
        parts = WorkerFactory.map(_schwarz_point, items)

        coordinates = {key: _concat(parts, key) for key in ("lambda", "beta", "phi_b1", "phi_b2", "b1")}
        rows = [self.summarize(name, _concat(parts, name), coordinates, tolerance=self.config.BOUND_SLACK)
                for name in self.BOUND_ROWS]
        rows.append(self.summarize("schwarz-a3-identity", _concat(parts, "schwarz-a3-identity"),
                                   coordinates, tolerance=EXACT_TOLERANCE))
        return rows


def _caratheodory_schwarz_point(item):
    lam, beta, phi, rng, samples = item
    c1, c2, _ = sampler.sample_grenander(rng, samples)
    b1, b2 = schwarz_from_caratheodory(c1, c2)
    a2, a3, _, admissible = sampler.schwarz_arrays(b1, b2, phi, lam)
    logger.info("lambda=%g beta=%g: %d of %d mapped prefixes admissible", lam, beta,
                int(np.count_nonzero(admissible)), samples)

    # rejected draws are out of scope for the bound rows
    return {
        "lambda": np.full(samples, lam),
        "beta": np.full(samples, beta),
        "phi_b1": np.full(samples, phi.b1),
        "phi_b2": np.full(samples, phi.b2),
        "c1": c1,
        "caratheodory-schwarz-disk": np.abs(b2) - (1.0 - np.abs(b1) ** 2),
        "caratheodory-a2-bound": np.where(admissible, np.abs(a2) - a2_bound(phi, lam).value, -np.inf),
        "caratheodory-a3-bound": np.where(admissible, np.abs(a3) - a3_bound(phi, lam).value, -np.inf),
    }


class CaratheodorySchwarzCheck(BaseCheck):
    """The |a2| and |a3| bounds on Schwarz prefixes mapped from sampled Carathéodory prefixes."""
    name = "caratheodory-schwarz"

    def rows(self) -> list:
        run = self.run_config
        cases = phi_cases(run)
        streams = sampler.point_streams(run.seed, len(cases), STREAM_CARATHEODORY_SCHWARZ)
        items = [(lam, beta, phi, rng, run.samples) for (lam, beta, phi), rng in zip(cases, streams)]
        parts = WorkerFactory.map(_caratheodory_schwarz_point, items)

        coordinates = {key: _concat(parts, key) for key in ("lambda", "beta", "phi_b1", "phi_b2", "c1")}
        return [
            self.summarize("caratheodory-schwarz-disk", _concat(parts, "caratheodory-schwarz-disk"),
                           coordinates, tolerance=self.config.ADMISSIBILITY_TOLERANCE),
            self.summarize("caratheodory-a2-bound", _concat(parts, "caratheodory-a2-bound"),
                           coordinates, tolerance=self.config.BOUND_SLACK),
            self.summarize("caratheodory-a3-bound", _concat(parts, "caratheodory-a3-bound"),
                           coordinates, tolerance=self.config.BOUND_SLACK),
        ]


class GrenanderRoundTripCheck(BaseCheck):
    """Prefixes built from (c1, x, z) are admissible and obey the coefficient estimates."""
    name = "grenander-round-trip"

    def rows(self) -> list:
        run = self.run_config
        tolerance = self.config.ADMISSIBILITY_TOLERANCE
        rng = sampler.point_streams(run.seed, 1, STREAM_GRENANDER)[0]
        c1, c2, c3 = sampler.sample_grenander(rng, run.samples)

        slack = np.minimum.reduce(sampler.admissibility_slacks(c1, c2, c3))
        moduli = np.maximum.reduce([c1, np.abs(c2), np.abs(c3)]) - 2.0
        disk = np.abs(c2 - c1 ** 2 / 2.0) - (2.0 - c1 ** 2 / 2.0)

        coordinates = {"c1": c1, "c2_abs": np.abs(c2)}
        return [
            self.summarize("grenander-admissible", -slack, coordinates, tolerance=tolerance),
            self.summarize("grenander-coefficient-moduli", moduli, coordinates, tolerance=tolerance),
            self.summarize("grenander-c2-disk", disk, coordinates, tolerance=tolerance),
        ]


class InverseIdentityCheck(BaseCheck):
    """g(f(z)) = z through order 4 for random prefixes."""
    name = "inverse-identity"

    def rows(self) -> list:
        rng = sampler.point_streams(self.run_config.seed, 1, STREAM_INVERSE)[0]
        a2 = sampler.uniform_disk(rng, INVERSE_SAMPLES, 2.0)
        a3 = sampler.uniform_disk(rng, INVERSE_SAMPLES, 3.0)
        a4 = sampler.uniform_disk(rng, INVERSE_SAMPLES, 4.0)

        residual = np.array([
            max(abs(value) for value in composition_residuals(TaylorPrefix(*coefficients)))
            for coefficients in zip(a2, a3, a4)
        ])
        coordinates = {"a2_abs": np.abs(a2), "a3_abs": np.abs(a3), "a4_abs": np.abs(a4)}
        return [self.summarize(self.name, residual, coordinates, tolerance=EXACT_TOLERANCE)]


CHECKS = (
    ProofSignCheck,
    CornerDominanceCheck,
    BranchContinuityCheck,
    CorollaryConsistencyCheck,
    SpecialPhiCheck,
    OracleAgreementCheck,
    SamplerHankelCheck,
    SchwarzBoundsCheck,
    CaratheodorySchwarzCheck,
    GrenanderRoundTripCheck,
    InverseIdentityCheck,
)


def run_checks(config, run_config, checks=CHECKS) -> list:
    """All report rows, in check order"""
    logger.debug("worker pool: %s", WorkerFactory.health_check())
    rows = []
    for check_class in checks:
        logger.info("running %s", check_class.name)
        rows.extend(check_class(config, run_config).rows())
    return rows
