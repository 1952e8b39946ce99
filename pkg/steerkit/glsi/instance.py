"""Bob projectors and Bloch vectors of the GLSI family."""

# Standard Library
import math
from typing import Tuple, Sequence

# Third Party
import numpy as np

# Project
from steerkit.log import log
from steerkit.qcore import PAULIS, schmidt_state, validate_projector
from steerkit.constants import PROJECTOR_TOL, ZERO_PROBABILITY
from steerkit.exceptions import InputInvalid, NotProjector, DegenerateReference
from steerkit.models.glsi import GlsiInstance
from steerkit.steering import check_distinct, conditional_state
from steerkit.models.steering import MeasurementDirection

XYZ = tuple(MeasurementDirection.named(axis) for axis in ("x", "y", "z"))


def _check_theta(theta: float, n: MeasurementDirection) -> None:
    if not 0 <= theta <= math.pi / 2:
        raise InputInvalid("Reference angle θ={theta} outside (0, π/2)", theta=theta)
    # Endpoints are product references: the two conditional states coincide.
    weight = min(math.cos(theta), math.sin(theta)) ** 2
    if weight <= ZERO_PROBABILITY:
        raise DegenerateReference(magnitude=weight, direction=str(n))


def bob_projectors(
    theta: float, phi: float, n: MeasurementDirection
) -> Tuple[np.ndarray, np.ndarray]:
    """Return (Π₊, Π₋), the projectors onto Bob's normalized |χ±⟩.

    |χ±⟩ ∝ ⟨±n̂|Ψ(θ,φ)⟩ for the reference state cos θ|00⟩ + e^{iφ} sin θ|11⟩.
    """
    _check_theta(theta, n)
    reference = schmidt_state(theta, phi).density

    pair = ()
    for a in (0, 1):
        state = conditional_state(reference, n, a)
        if state.probability <= ZERO_PROBABILITY:
            raise DegenerateReference(magnitude=state.probability, direction=str(n))
        pair += (state.normalized,)
    return pair


def bloch_vector(p: np.ndarray) -> Tuple[float, float, float]:
    """Return m̂ with p = (𝟙 + m̂·σ⃗)/2 for a rank-1 projector p."""
    p = validate_projector(p)
    m_hat = tuple(float(np.trace(p @ sigma).real) for sigma in PAULIS)
    defect = abs(math.sqrt(sum(c * c for c in m_hat)) - 1)
    if defect > PROJECTOR_TOL:
        raise NotProjector(magnitude=defect, check="unit Bloch vector")
    return m_hat


def build_instance(
    theta: float, phi: float = 0.0, directions: Sequence[MeasurementDirection] = XYZ
) -> GlsiInstance:
    """Build the k-setting GLSI member for reference (θ, φ) and Alice's directions."""
    if not directions:
        raise InputInvalid("At least one measurement direction is required")
    check_distinct(directions)

    projectors = [bob_projectors(theta, phi, n) for n in directions]
    vectors = [(bloch_vector(plus), bloch_vector(minus)) for plus, minus in projectors]

    log.debug("GLSI instance theta={}, phi={}, k={}", theta, phi, len(directions))

    return GlsiInstance(
        theta=theta,
        phi=phi,
        directions=list(directions),
        bob_projectors=projectors,
        bloch_vectors=vectors,
    )
