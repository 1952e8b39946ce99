"""Configuration validation entry point."""

# Third Party
from pydantic import (
    Field,
    StrictBool,
    PositiveInt,
    conint,
    confloat,
    validator,
)

# Project
from steerkit.constants import (
    MAX_SEED,
    PHI_STEPS,
    THETA_TOL,
    DEFAULT_SEED,
    THETA_MARGIN,
    THETA_STEPS,
    BISECTION_TOL,
)

# Local
from ..main import SteerkitModel
from .logging import Logging


class Search(SteerkitModel):
    """Violation search settings."""

    theta_steps: conint(ge=3) = Field(
        THETA_STEPS,
        title="θ Grid Size",
        description="Number of coarse grid points in θ before golden-section refinement.",
    )
    theta_margin: confloat(gt=0, lt=0.1) = Field(
        THETA_MARGIN,
        title="θ Margin",
        description="Distance kept from the degenerate endpoints 0 and π/2.",
    )
    theta_tol: confloat(gt=0, le=1e-3) = Field(
        THETA_TOL,
        title="θ Tolerance",
        description="Golden-section convergence tolerance in θ.",
    )
    phi_steps: PositiveInt = Field(
        PHI_STEPS,
        title="φ Grid Size",
        description="Number of φ values scanned when a φ scan is requested.",
    )
    sign_flips: StrictBool = Field(
        True,
        title="Sign Flips",
        description="Also maximize over the eight orientations of Alice's observables.",
    )


class Scan(SteerkitModel):
    """Threshold and region scan settings."""

    bisection_tol: confloat(ge=1e-6, le=0.1) = BISECTION_TOL
    alpha_steps: conint(ge=2) = 50
    v_steps: conint(ge=2) = 50
    threads: conint(ge=0) = Field(
        0, description="Worker threads for region scans; 0 uses the available parallelism."
    )


class Shots(SteerkitModel):
    """Shot simulation settings."""

    shots_per_setting: PositiveInt = 10000
    seed: conint(ge=0, le=MAX_SEED) = DEFAULT_SEED


class Params(SteerkitModel):
    """Validation model for all configuration variables."""

    debug: StrictBool = Field(
        False,
        title="Debug",
        description="Enable debug mode. Warning: this will generate a *lot* of log output.",
    )
    search: Search = Search()
    scan: Scan = Scan()
    shots: Shots = Shots()
    logging: Logging = Logging()

    @validator("logging", pre=True)
    def validate_logging(cls, value):
        """An empty `logging:` key means defaults."""
        return value or {}
