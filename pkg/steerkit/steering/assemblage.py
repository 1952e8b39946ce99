"""Bob's conditional states for Alice's projective measurements."""

# Standard Library
from typing import Sequence

# Third Party
import numpy as np

# Project
from steerkit.log import log
from steerkit.qcore import IDENTITY, tensor, validate_density, partial_trace_alice
from steerkit.constants import ZERO_PROBABILITY, DIRECTION_SEPARATION
from steerkit.exceptions import InputInvalid, DuplicateDirections
from steerkit.models.steering import Assemblage, ConditionalState, MeasurementDirection

# Local
from .measurement import projector


def _conditional(rho_ab: np.ndarray, n: MeasurementDirection, a: int) -> ConditionalState:
    unnormalized = partial_trace_alice(tensor(projector(n, a), IDENTITY) @ rho_ab, validate=False)
    unnormalized = (unnormalized + unnormalized.conj().T) / 2
    probability = float(np.trace(unnormalized).real)
    normalized = None
    if probability > ZERO_PROBABILITY:
        normalized = unnormalized / probability
    return ConditionalState(
        direction=n,
        outcome=a,
        unnormalized=unnormalized,
        probability=probability,
        normalized=normalized,
    )


def conditional_state(
    rho_ab: np.ndarray, n: MeasurementDirection, a: int
) -> ConditionalState:
    """Return ρ̃ⁿₐ = tr_A[(P̂ₐⁿ ⊗ 𝟙) ρ_AB], its probability and normalized form.

    The normalized state is None on a zero-probability branch.
    """
    if a not in (0, 1):
        raise InputInvalid("Outcome must be 0 or 1, got {a}", a=a)
    rho_ab = validate_density(rho_ab)
    if rho_ab.shape != (4, 4):
        raise InputInvalid("Expected a two-qubit density matrix")
    return _conditional(rho_ab, n, a)


def check_distinct(directions: Sequence[MeasurementDirection]) -> None:
    """Reject direction sets in which two directions coincide up to sign."""
    for i, first in enumerate(directions):
        for second in directions[i + 1 :]:
            separation = first.angle_to(second)
            if separation <= DIRECTION_SEPARATION:
                raise DuplicateDirections(
                    magnitude=separation, first=str(first), second=str(second)
                )


def build_assemblage(
    rho_ab: np.ndarray, directions: Sequence[MeasurementDirection]
) -> Assemblage:
    """Collect the conditional states for every direction and outcome."""
    if not directions:
        raise InputInvalid("At least one measurement direction is required")

    rho_ab = validate_density(rho_ab)
    if rho_ab.shape != (4, 4):
        raise InputInvalid("Expected a two-qubit density matrix")
    check_distinct(directions)

    states = [(_conditional(rho_ab, n, 0), _conditional(rho_ab, n, 1)) for n in directions]
    log.debug("Built assemblage over {} settings", len(directions))

    return Assemblage(
        directions=list(directions),
        rho_b=partial_trace_alice(rho_ab, validate=False),
        states=states,
    )
