"""Generalized linear steering inequality models."""

# Standard Library
from typing import List, Tuple

# Third Party
import numpy as np
from pydantic import StrictInt, validator, root_validator

# Project
from steerkit.constants import PROJECTOR_TOL

# Local
from .main import SteerkitModel, SteerkitArrayModel
from .fields import Radians, ReferenceTheta
from .steering import MeasurementDirection

Sign = StrictInt
Vector = Tuple[float, float, float]


def _check_signs(value: Tuple[int, ...]) -> Tuple[int, ...]:
    if any(s not in (1, -1) for s in value):
        raise ValueError("Alice orientation signs must be +1 or -1")
    return value


class GlsiInstance(SteerkitArrayModel):
    """One member of the k-setting GLSI family.

    `bob_projectors[j]` holds (Π₊, Π₋) for direction j, built from the
    reference state cos θ|00⟩ + e^{iφ} sin θ|11⟩, and `bloch_vectors[j]`
    holds the matching (m̂₊, m̂₋).
    """

    theta: ReferenceTheta
    phi: Radians = 0.0
    directions: List[MeasurementDirection]
    bob_projectors: List[Tuple[np.ndarray, np.ndarray]]
    bloch_vectors: List[Tuple[Vector, Vector]]

    @root_validator(skip_on_failure=True)
    def validate_projectors(cls, values):
        """Each projector must equal (𝟙 + m̂·σ⃗)/2 for its Bloch vector."""
        # Project
        from steerkit.qcore import IDENTITY, bloch_operator

        if not (len(values["directions"]) == len(values["bob_projectors"]) == len(values["bloch_vectors"])):
            raise ValueError("directions, projectors and Bloch vectors differ in length")

        for pair, vectors in zip(values["bob_projectors"], values["bloch_vectors"]):
            for projector, m_hat in zip(pair, vectors):
                expected = (IDENTITY + bloch_operator(m_hat)) / 2
                defect = float(np.max(np.abs(projector - expected)))
                if defect > PROJECTOR_TOL:
                    raise ValueError(f"projector disagrees with its Bloch vector by {defect:.3e}")
        return values

    @property
    def k(self) -> int:
        """Number of settings."""
        return len(self.directions)

    def antiparallel_defect(self) -> float:
        """Return max |m̂ʲ₊ + m̂ʲ₋|, zero at θ = π/4."""
        return max(
            float(np.linalg.norm(np.add(plus, minus))) for plus, minus in self.bloch_vectors
        )


class LhsStrategy(SteerkitArrayModel):
    """A deterministic response a ∈ {0,1}ᵏ and its aggregated Bob operator."""

    assignment: Tuple[int, ...]
    aggregate: np.ndarray
    max_eigenvalue: float

    @validator("assignment")
    def validate_assignment_values(cls, value):
        """Outcomes are 0 or 1."""
        if any(a not in (0, 1) for a in value):
            raise ValueError("assignment outcomes must be 0 or 1")
        return value


class BoundResult(SteerkitModel):
    """Exact LHS bound with every maximizing strategy."""

    c_lhs: float
    maximizing: List[LhsStrategy]


class Correlators(SteerkitModel):
    """The six expectation values entering the 3-setting correlator form."""

    xx: float
    yy: float
    xy: float
    yx: float
    zz: float
    iz: float


class InequalityReport(SteerkitModel):
    """Full evaluation of the 3-setting GLSI at one (θ, φ, signs)."""

    theta_star: Radians
    phi: Radians = 0.0
    signs: Tuple[Sign, Sign, Sign] = (1, 1, 1)
    s3: float
    s3_prime: float
    c_lhs: float
    c_lhs_prime: float
    violation: float
    maximizing_strategies: List[Tuple[int, ...]]
    correlators: Correlators

    _check_signs = validator("signs", allow_reuse=True)(_check_signs)

    @root_validator(skip_on_failure=True)
    def validate_identities(cls, values):
        """S′₃ = 2·S₃ − 3 and C′ = 2·C − 3."""
        if abs(values["s3_prime"] - (2 * values["s3"] - 3)) > 1e-10:
            raise ValueError("s3_prime differs from 2*s3 - 3")
        if abs(values["c_lhs_prime"] - (2 * values["c_lhs"] - 3)) > 1e-10:
            raise ValueError("c_lhs_prime differs from 2*c_lhs - 3")
        if abs(values["violation"] - (values["s3_prime"] - values["c_lhs_prime"])) > 1e-12:
            raise ValueError("violation differs from s3_prime - c_lhs_prime")
        return values


class ViolationSearch(SteerkitModel):
    """Best (θ, φ, signs) found when maximizing S′₃ − C′_LHS."""

    theta_star: Radians
    phi_star: Radians
    signs: Tuple[Sign, Sign, Sign]
    violation: float
    s3_prime: float
    c_lhs_prime: float

    _check_signs = validator("signs", allow_reuse=True)(_check_signs)

    @property
    def detected(self) -> bool:
        """A strictly positive violation certifies steering."""
        return self.violation > 0
