"""Alice's projective measurements."""

# Third Party
import numpy as np

# Project
from steerkit.qcore import IDENTITY, bloch_operator
from steerkit.exceptions import InputInvalid
from steerkit.models.steering import MeasurementDirection


def projector(n: MeasurementDirection, a: int) -> np.ndarray:
    """Return P̂ₐ = [𝟙 + (−1)ᵃ σ⃗·n̂]/2."""
    if a not in (0, 1):
        raise InputInvalid("Outcome must be 0 or 1, got {a}", a=a)
    sign = 1 - 2 * a
    return (IDENTITY + sign * bloch_operator(n.n_hat)) / 2


def signed(n: MeasurementDirection, sign: int) -> MeasurementDirection:
    """Return n̂ or −n̂; flipping the sign swaps Alice's outcome labels."""
    if sign == 1:
        return n
    label = None
    if n.label:
        label = n.label[1:] if n.label.startswith("-") else f"-{n.label}"
    return MeasurementDirection(n_hat=tuple(-c for c in n.n_hat), label=label)
