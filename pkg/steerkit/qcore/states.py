"""Construction of the two-qubit states used for steering tests."""

# Standard Library
import math
from typing import List, Tuple, Sequence

# Third Party
import numpy as np

# Project
from steerkit.log import log
from steerkit.constants import MIX_TOL, RAW_MATRIX_TOL
from steerkit.exceptions import InputInvalid, ProbabilityMismatch
from steerkit.models.quantum import (
    PureState,
    WavePlates,
    ComplexMatrix,
    StateFamilySpec,
    OpticsPreparation,
)

# Local
from .linalg import SIGMA_X, validate_density

MAXIMALLY_MIXED = np.eye(4, dtype=complex) / 4
MAXIMALLY_MIXED.setflags(write=False)


def schmidt_state(alpha: float, phase: float = 0.0) -> PureState:
    """Return cos α|00⟩ + e^{iφ} sin α|11⟩."""
    amplitudes = np.zeros(4, dtype=complex)
    amplitudes[0] = math.cos(alpha)
    amplitudes[3] = np.exp(1j * phase) * math.sin(alpha)
    return PureState(dim=4, amplitudes=amplitudes)


def flipped_state(alpha: float) -> PureState:
    """Return sin α|01⟩ + cos α|10⟩, the admixture of the asymmetric family."""
    amplitudes = np.zeros(4, dtype=complex)
    amplitudes[1] = math.sin(alpha)
    amplitudes[2] = math.cos(alpha)
    return PureState(dim=4, amplitudes=amplitudes)


def make_state(spec: StateFamilySpec) -> np.ndarray:
    """Build the density matrix described by `spec`."""

    if spec.family == "raw":
        rho = spec.raw_matrix.to_array()
        return validate_density(
            rho,
            hermitian_tol=RAW_MATRIX_TOL,
            trace_tol=RAW_MATRIX_TOL,
            psd_tol=RAW_MATRIX_TOL,
        )

    target = schmidt_state(spec.alpha, spec.phase).density
    v = float(spec.visibility)

    if spec.family == "pure":
        rho = target
    elif spec.family == "werner":
        rho = v * target + (1 - v) * MAXIMALLY_MIXED
    else:
        rho = v * target + (1 - v) * flipped_state(spec.alpha).density

    log.debug(
        "Built {} state: alpha={}, phase={}, V={}", spec.family, spec.alpha, spec.phase, v
    )
    return rho


def state_from_matrix(matrix: ComplexMatrix) -> np.ndarray:
    """Validate and return a raw density matrix."""
    return make_state(StateFamilySpec(family="raw", raw_matrix=matrix))


def mix(components: Sequence[Tuple[float, np.ndarray]]) -> np.ndarray:
    """Return the convex combination Σ pᵢ ρᵢ."""
    if not components:
        raise InputInvalid("Cannot mix an empty list of components")

    probabilities = np.array([float(p) for p, _ in components])
    lowest = float(probabilities.min())
    if lowest < 0:
        raise ProbabilityMismatch(magnitude=-lowest, check="nonnegative")

    total_defect = abs(float(probabilities.sum()) - 1.0)
    if total_defect > MIX_TOL:
        raise ProbabilityMismatch(magnitude=total_defect, check="sum to one")

    matrices = [np.asarray(m, dtype=complex) for _, m in components]
    shapes = {m.shape for m in matrices}
    if len(shapes) != 1:
        raise InputInvalid("Cannot mix matrices of shapes {shapes}", shapes=sorted(shapes))

    mixed = sum(p * m for p, m in zip(probabilities, matrices))
    return validate_density(mixed)


def computational_basis_projectors() -> List[np.ndarray]:
    """Return |HH⟩⟨HH|, |HV⟩⟨HV|, |VH⟩⟨VH|, |VV⟩⟨VV|."""
    projectors = []
    for index in range(4):
        projector = np.zeros((4, 4), dtype=complex)
        projector[index, index] = 1
        projectors.append(projector)
    return projectors


def beta_for_alpha(alpha: float) -> float:
    """Return the interferometer angle β = arcsin(tan α) preparing Schmidt angle α."""
    if not 0 < alpha <= math.pi / 4 + 1e-15:
        raise InputInvalid(
            "Target Schmidt angle {alpha} outside (0, π/4]", alpha=alpha
        )
    return math.asin(min(1.0, math.tan(alpha)))


def optics_prep(beta: float) -> OpticsPreparation:
    """Model the asymmetric-loss interferometer at loss angle `beta`.

    The source pair (|HH⟩ + |VV⟩)/√2 loses amplitude through diag(sin β, 1) on
    Bob's photon; relabelling H ⇌ V on both photons then gives
    cos α|00⟩ + sin α|11⟩ with tan α = sin β.
    """
    if not 0 <= beta <= math.pi / 2:
        raise InputInvalid("Interferometer angle {beta} outside [0, π/2]", beta=beta)

    source = np.array([1, 0, 0, 1], dtype=complex) / math.sqrt(2)
    loss = np.kron(np.eye(2), np.diag([math.sin(beta), 1.0]))
    heralded = loss @ source
    flip = np.kron(SIGMA_X, SIGMA_X)
    transmission = float(np.vdot(heralded, heralded).real)

    state = PureState.from_amplitudes(flip @ heralded)
    alpha = math.atan(math.sin(beta))

    log.debug("Interferometer beta={} prepares alpha={} (transmission {})", beta, alpha, transmission)

    return OpticsPreparation(
        beta=beta,
        alpha=alpha,
        state=state,
        transmission=transmission,
        wave_plates=WavePlates(hwp2_deg=math.degrees(beta / 2)),
    )
