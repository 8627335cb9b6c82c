"""RunConfig model: the validated options of one CLI invocation."""

from dataclasses import dataclass
from typing import Optional

from biuniv.base.base_model import BaseModel
from biuniv.helpers.error import ConfigurationError, DomainError
from biuniv.helpers.grid_parser import parse_grid
from biuniv.helpers.validation import validate_beta, validate_lambda, validate_resolution, validate_samples
from biuniv.models.minda import MindaPhi, special_phi
from biuniv.services.oracle_optimizer import MAX_INTERVAL_RESOLUTION


# CLI spelling -> special_phi kind
PHI_KIND_NAMES = {
    "linear": "linear-order",
    "power": "power",
}


@dataclass(frozen=True)
class RunConfig:
    """Everything a command needs, with defaults already applied."""
    command: str
    lam: Optional[float]
    beta: Optional[float]
    lambda_grid: tuple
    beta_grid: tuple
    phi: Optional[MindaPhi]
    phi_kind: Optional[str]
    phi_param: Optional[float]
    resolution: float
    samples: int
    seed: int
    output: str
    format: str

    def phi_for(self, beta: float) -> MindaPhi:
        """
        The subordinating function at a given beta.

        Explicit (B1, B2) wins; then a special kind; otherwise linear-order(beta).
        """
        if self.phi is not None:
            return self.phi
        if self.phi_kind is not None:
            param = self.phi_param if self.phi_param is not None else beta
            return special_phi(self.phi_kind, param)
        return special_phi("linear-order", beta)

    @property
    def phi_label(self) -> str:
        if self.phi is not None:
            return "explicit"
        if self.phi_kind is not None:
            return self.phi_kind
        return "linear-order"

    @property
    def points(self) -> list:
        """(lambda, beta) pairs sorted by (lambda, beta)."""
        return [(lam, beta) for lam in self.lambda_grid for beta in self.beta_grid]


class RunConfigModel(BaseModel):
    """RunConfig model: schema validation plus the cross-field rules of each command.

    Defaults for resolution, samples, seed and the grids come from the
    active config class.
    """
    object_type = "run_config"

    def __init__(self, config):
        super().__init__()
        self.config = config

    def validate_data(self, data: dict) -> dict:
        validated = super().validate_data(data)

        if (validated["phi_b1"] is None) != (validated["phi_b2"] is None):
            raise ConfigurationError("phi-b1 and phi-b2 must be given together")
        if validated["phi_b1"] is not None and validated["phi_kind"] is not None:
            raise ConfigurationError("give either phi-b1/phi-b2 or phi-kind, not both")
        if validated["phi_param"] is not None and validated["phi_kind"] is None:
            raise ConfigurationError("phi-param requires phi-kind")
        if validated["phi_kind"] == "power" and validated["phi_param"] is None:
            raise ConfigurationError("phi-kind power requires phi-param")

        if validated["command"] == "bounds":
            for name in ("lambda", "beta"):
                if validated[name] is None:
                    raise ConfigurationError(f"bounds requires --{name}")

        return validated

    def build(self, data: dict) -> RunConfig:
        """
        Validate raw options and apply defaults

        Raises:
            ConfigurationError: If the options are invalid
        """
        validated = self.validate_data(data)
        config = self.config

        lam, beta = validated["lambda"], validated["beta"]
        lambda_text = validated["lambda_grid"] or (str(lam) if lam is not None else config.DEFAULT_LAMBDA_GRID)
        beta_text = validated["beta_grid"] or (str(beta) if beta is not None else config.DEFAULT_BETA_GRID)
        lambda_grid = parse_grid(lambda_text, "lambda-grid", validate_lambda)
        beta_grid = parse_grid(beta_text, "beta-grid", validate_beta)

        phi_kind = PHI_KIND_NAMES.get(validated["phi_kind"]) if validated["phi_kind"] else None
        phi = None
        try:
            if validated["phi_b1"] is not None:
                phi = MindaPhi(b1=validated["phi_b1"], b2=validated["phi_b2"])
            elif phi_kind is not None and validated["phi_param"] is not None:
                special_phi(phi_kind, validated["phi_param"])

            resolution = validated["resolution"] if validated["resolution"] is not None \
                else config.DEFAULT_RESOLUTION
            if validated["command"] != "bounds":
                resolution = validate_resolution(resolution, MAX_INTERVAL_RESOLUTION)
            samples = validated["samples"] if validated["samples"] is not None else config.DEFAULT_SAMPLES
            samples = validate_samples(samples)
        except DomainError as exc:
            raise ConfigurationError(str(exc)) from exc

        return RunConfig(
            command=validated["command"],
            lam=lam,
            beta=beta,
            lambda_grid=lambda_grid,
            beta_grid=beta_grid,
            phi=phi,
            phi_kind=phi_kind,
            phi_param=validated["phi_param"],
            resolution=resolution,
            samples=samples,
            seed=validated["seed"] if validated["seed"] is not None else config.DEFAULT_SEED,
            output=validated["output"],
            format=validated["format"] or ("json" if validated["command"] != "sweep" else "csv"),
        )
