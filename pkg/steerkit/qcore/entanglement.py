"""Schmidt parameters and partial-transpose entanglement tests."""

# Standard Library
import math
from typing import Tuple

# Third Party
import numpy as np

# Project
from steerkit.constants import PSD_TOL
from steerkit.exceptions import InputInvalid
from steerkit.models.quantum import PureState

# Local
from .linalg import eig_herm, validate_density, partial_transpose_bob


def _two_qubit(psi: PureState) -> np.ndarray:
    if psi.dim != 4:
        raise InputInvalid("Expected a two-qubit state, got dimension {dim}", dim=psi.dim)
    return psi.amplitudes.reshape(2, 2)


def schmidt_angle(psi: PureState) -> float:
    """Return arctan(s₂/s₁) ∈ [0, π/4] from the Schmidt coefficients s₁ ≥ s₂."""
    singular = np.linalg.svd(_two_qubit(psi), compute_uv=False)
    return math.atan2(float(singular[1]), float(singular[0]))


def schmidt_parameters(psi: PureState) -> Tuple[float, float]:
    """Return (α, φ) of cos α|00⟩ + e^{iφ} sin α|11⟩, up to global phase."""
    amplitudes = _two_qubit(psi)
    if abs(amplitudes[0, 1]) > 1e-10 or abs(amplitudes[1, 0]) > 1e-10:
        raise InputInvalid("State is not in computational Schmidt form")

    c00, c11 = amplitudes[0, 0], amplitudes[1, 1]
    alpha = math.atan2(abs(c11), abs(c00))
    if abs(c00) < 1e-15 or abs(c11) < 1e-15:
        return alpha, 0.0
    phase = (np.angle(c11) - np.angle(c00)) % (2 * math.pi)
    return alpha, float(phase)


def negativity(rho: np.ndarray) -> float:
    """Return the sum of |negative eigenvalues| of Bob's partial transpose."""
    rho = validate_density(rho)
    spectrum = eig_herm(partial_transpose_bob(rho))
    return float(-spectrum[spectrum < 0].sum())


def is_entangled(rho: np.ndarray, tol: float = PSD_TOL) -> bool:
    """Peres–Horodecki test, exact for two qubits."""
    rho = validate_density(rho)
    return bool(eig_herm(partial_transpose_bob(rho))[-1] < -tol)
