"""Measurement directions, assemblages and paradox reports."""

# Standard Library
import re
import math
from typing import List, Tuple, Optional

# Third Party
import numpy as np
from pydantic import StrictStr, validator, root_validator

# Project
from steerkit.constants import TRACE_TOL, NAMED_DIRECTIONS

# Local
from .main import SteerkitModel, SteerkitArrayModel
from .fields import Outcome

_ANGLE = re.compile(r"^\s*([-+]?(?:\d+\.?\d*|\.\d+)(?:[eE][-+]?\d+)?)\s*(deg)?\s*$")


def parse_angle(token: str) -> float:
    """Parse an angle in radians, or in degrees when suffixed with `deg`."""
    match = _ANGLE.match(token)
    if match is None:
        raise ValueError(f"'{token}' is not an angle (radians, or degrees with 'deg')")
    value = float(match.group(1))
    if match.group(2):
        value = math.radians(value)
    return value


class MeasurementDirection(SteerkitModel):
    """Unit vector on the Bloch sphere, n̂ = (sin τ cos γ, sin τ sin γ, cos τ)."""

    n_hat: Tuple[float, float, float]
    label: Optional[StrictStr]

    class Config:
        """Directions are hashable values."""

        frozen = True

    @validator("n_hat")
    def normalize(cls, value):
        """Renormalize to unit length."""
        norm = math.sqrt(sum(c * c for c in value))
        if not math.isfinite(norm) or norm < 1e-12:
            raise ValueError("direction vector must be finite and nonzero")
        return tuple(float(c) / norm for c in value)

    @classmethod
    def from_angles(
        cls, tau: float, gamma: float, label: Optional[str] = None
    ) -> "MeasurementDirection":
        """Build a direction from polar angle τ and azimuth γ."""
        return cls(
            n_hat=(
                math.sin(tau) * math.cos(gamma),
                math.sin(tau) * math.sin(gamma),
                math.cos(tau),
            ),
            label=label,
        )

    @classmethod
    def named(cls, name: str) -> "MeasurementDirection":
        """Return x̂, ŷ or ẑ, optionally negated with a leading '-'."""
        sign, axis = (-1.0, name[1:]) if name.startswith("-") else (1.0, name)
        if axis not in NAMED_DIRECTIONS:
            raise ValueError(f"unknown direction '{name}'")
        return cls(n_hat=tuple(sign * c for c in NAMED_DIRECTIONS[axis]), label=name)

    @classmethod
    def parse(cls, token: str) -> "MeasurementDirection":
        """Parse 'x', 'y', 'z' (optionally '-x' etc.) or 'tau,gamma'."""
        token = token.strip().lower()
        if token.lstrip("-") in NAMED_DIRECTIONS:
            return cls.named(token)
        parts = token.split(",")
        if len(parts) != 2:
            raise ValueError(f"'{token}' is neither a named axis nor 'tau,gamma'")
        return cls.from_angles(parse_angle(parts[0]), parse_angle(parts[1]))

    @property
    def vector(self) -> np.ndarray:
        """Return n̂ as a numpy array."""
        return np.array(self.n_hat)

    @property
    def tau(self) -> float:
        """Polar angle in [0, π]."""
        return math.acos(max(-1.0, min(1.0, self.n_hat[2])))

    @property
    def gamma(self) -> float:
        """Azimuth in [0, 2π), 0 at the poles."""
        x, y, _ = self.n_hat
        if math.hypot(x, y) < 1e-12:
            return 0.0
        return math.atan2(y, x) % (2 * math.pi)

    def angle_to(self, other: "MeasurementDirection") -> float:
        """Angular separation, identifying antipodal directions."""
        cosine = abs(float(np.dot(self.vector, other.vector)))
        return math.acos(min(1.0, cosine))

    def __str__(self) -> str:
        """Return the label, or the canonical (τ, γ) pair."""
        if self.label:
            return self.label
        return f"{self.tau:.12g},{self.gamma:.12g}"


def parse_directions(text: str) -> List[MeasurementDirection]:
    """Parse a direction list such as 'z,x', 'x,y,z' or '1.2,0.4;z'.

    Chunks are separated by ';'. Inside a chunk, comma-separated axis names
    are separate directions; two comma-separated angles are one (τ, γ)
    direction.
    """
    directions = []
    for chunk in (c for c in text.split(";") if c.strip()):
        parts = [p.strip().lower() for p in chunk.split(",")]
        if all(p.lstrip("-") in NAMED_DIRECTIONS for p in parts):
            directions.extend(MeasurementDirection.named(p) for p in parts)
        else:
            directions.append(MeasurementDirection.parse(chunk))
    if not directions:
        raise ValueError("no directions given")
    return directions


class ConditionalState(SteerkitArrayModel):
    """Bob's conditional state for one Alice setting and outcome."""

    direction: MeasurementDirection
    outcome: Outcome
    unnormalized: np.ndarray
    probability: float
    normalized: Optional[np.ndarray]

    @property
    def defined(self) -> bool:
        """Return True when the normalized state exists."""
        return self.normalized is not None


class Assemblage(SteerkitArrayModel):
    """All conditional states {ρ̃ʲₐ} for a list of Alice directions."""

    directions: List[MeasurementDirection]
    rho_b: np.ndarray
    states: List[Tuple[ConditionalState, ConditionalState]]

    @root_validator(skip_on_failure=True)
    def validate_no_signaling(cls, values):
        """Σₐ ρ̃ʲₐ = ρ_B and Σₐ pʲₐ = 1 for every setting."""
        rho_b = values["rho_b"]
        for zero, one in values["states"]:
            marginal = float(np.max(np.abs(zero.unnormalized + one.unnormalized - rho_b)))
            if marginal > TRACE_TOL:
                raise ValueError(f"no-signaling violated by {marginal:.3e}")
            total = abs(zero.probability + one.probability - 1.0)
            if total > TRACE_TOL:
                raise ValueError(f"outcome probabilities sum off by {total:.3e}")
        return values

    def __getitem__(self, key: Tuple[int, int]) -> ConditionalState:
        """Return the conditional state for (setting j, outcome a)."""
        j, a = key
        return self.states[j][a]

    def __iter__(self):
        """Iterate over (j, a, state)."""
        for j, pair in enumerate(self.states):
            for a, state in enumerate(pair):
                yield j, a, state

    @property
    def settings_count(self) -> int:
        """Number of Alice settings k."""
        return len(self.directions)


class ParadoxTerm(SteerkitModel):
    """One probability tr[ρ̃ʲₐ ρʲₐ] of the paradox sum."""

    direction: StrictStr
    outcome: Outcome
    probability: float


class ParadoxReport(SteerkitModel):
    """Quantum total of the steering paradox against the LHS prediction 1."""

    quantum_total: float
    lhs_prediction: float = 1.0
    per_term: List[ParadoxTerm]
    settings_count: int

    @root_validator(skip_on_failure=True)
    def validate_total(cls, values):
        """The total must be the sum of its terms."""
        total = sum(term.probability for term in values["per_term"])
        if abs(total - values["quantum_total"]) > 1e-12:
            raise ValueError("quantum_total does not equal the sum of its terms")
        return values
