"""Small-dimension complex linear algebra for one and two qubits.

Two-qubit operators use the row-major basis |00⟩, |01⟩, |10⟩, |11⟩ with
Alice as the first tensor factor, and |0⟩ ≡ |H⟩, |1⟩ ≡ |V⟩.
"""

# Standard Library
from typing import Tuple, Union

# Third Party
import numpy as np

# Project
from steerkit.log import log
from steerkit.constants import (
    PSD_TOL,
    TRACE_TOL,
    HERMITIAN_TOL,
    PROJECTOR_TOL,
    EIG_HERMITIAN_TOL,
)
from steerkit.exceptions import (
    NotHermitian,
    InputInvalid,
    NotProjector,
    NotDensityMatrix,
)

IDENTITY = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
PAULIS = (SIGMA_X, SIGMA_Y, SIGMA_Z)

for _matrix in (IDENTITY, *PAULIS):
    _matrix.setflags(write=False)


def _square(matrix: np.ndarray, dims: Tuple[int, ...] = (2, 4)) -> np.ndarray:
    matrix = np.asarray(matrix, dtype=complex)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise InputInvalid("Expected a square matrix, got shape {shape}", shape=matrix.shape)
    if matrix.shape[0] not in dims:
        raise InputInvalid(
            "Expected a matrix of dimension {dims}, got {dim}",
            dims=" or ".join(str(d) for d in dims),
            dim=matrix.shape[0],
        )
    return matrix


def bloch_operator(vector) -> np.ndarray:
    """Return v⃗·σ⃗ for a real 3-vector."""
    x, y, z = (float(c) for c in vector)
    return x * SIGMA_X + y * SIGMA_Y + z * SIGMA_Z


def tensor(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product of two single-qubit operators, Alice factor first."""
    a = _square(a, (2,))
    b = _square(b, (2,))
    return np.kron(a, b)


def hermiticity_defect(matrix: np.ndarray) -> float:
    """Return the largest entrywise deviation from Hermiticity."""
    matrix = np.asarray(matrix, dtype=complex)
    return float(np.max(np.abs(matrix - matrix.conj().T)))


def validate_density(
    rho: np.ndarray,
    hermitian_tol: float = HERMITIAN_TOL,
    trace_tol: float = TRACE_TOL,
    psd_tol: float = PSD_TOL,
) -> np.ndarray:
    """Ensure `rho` is a Hermitian, unit-trace, positive semidefinite matrix."""
    rho = _square(rho)

    defect = hermiticity_defect(rho)
    if defect > hermitian_tol:
        raise NotDensityMatrix(magnitude=defect, check="hermitian")

    trace_defect = abs(np.trace(rho) - 1.0)
    if trace_defect > trace_tol:
        raise NotDensityMatrix(magnitude=trace_defect, check="trace")

    lowest = float(np.linalg.eigvalsh((rho + rho.conj().T) / 2)[0])
    if lowest < -psd_tol:
        raise NotDensityMatrix(magnitude=-lowest, check="positive semidefinite")

    return rho


def validate_projector(matrix: np.ndarray, tol: float = PROJECTOR_TOL) -> np.ndarray:
    """Ensure `matrix` is a Hermitian rank-1 idempotent 2×2 operator."""
    matrix = _square(matrix, (2,))

    defect = hermiticity_defect(matrix)
    if defect > tol:
        raise NotProjector(magnitude=defect, check="hermitian")

    idempotency = float(np.max(np.abs(matrix @ matrix - matrix)))
    if idempotency > tol:
        raise NotProjector(magnitude=idempotency, check="idempotent")

    rank_defect = abs(np.trace(matrix).real - 1.0)
    if rank_defect > tol:
        raise NotProjector(magnitude=rank_defect, check="rank 1")

    return matrix


def partial_trace_alice(rho: np.ndarray, validate: bool = True) -> np.ndarray:
    """Trace out Alice's qubit, returning Bob's 2×2 operator.

    With `validate` unset the input may be any 4×4 operator, which is how the
    conditional-state computations use it.
    """
    rho = validate_density(rho) if validate else _square(rho, (4,))
    if rho.shape != (4, 4):
        raise InputInvalid("Partial trace requires a 4×4 operator, got {shape}", shape=rho.shape)
    return np.einsum("abad->bd", rho.reshape(2, 2, 2, 2))


def partial_transpose_bob(rho: np.ndarray) -> np.ndarray:
    """Transpose Bob's factor of a two-qubit operator."""
    rho = _square(rho, (4,))
    return rho.reshape(2, 2, 2, 2).transpose(0, 3, 2, 1).reshape(4, 4)


def _eig_2x2(h: np.ndarray, vectors: bool):
    a, d = h[0, 0].real, h[1, 1].real
    b = h[0, 1]
    mean = (a + d) / 2
    radius = float(np.hypot((a - d) / 2, abs(b)))
    values = np.array([mean + radius, mean - radius])

    if not vectors:
        return values

    if abs(b) > 0:
        columns = []
        for value in values:
            vec = np.array([b, value - a], dtype=complex)
            columns.append(vec / np.linalg.norm(vec))
        basis = np.column_stack(columns)
    elif a >= d:
        basis = np.eye(2, dtype=complex)
    else:
        basis = np.eye(2, dtype=complex)[:, ::-1]
    return values, basis


def eig_herm(
    h: np.ndarray, vectors: bool = False
) -> Union[np.ndarray, Tuple[np.ndarray, np.ndarray]]:
    """Eigen-decompose a Hermitian matrix, eigenvalues in descending order.

    2×2 matrices use the closed-form trace/discriminant solution; 4×4
    matrices use LAPACK's Hermitian solver. Eigenvectors are returned as
    columns when `vectors` is set.
    """
    h = _square(h)

    defect = hermiticity_defect(h)
    if defect > EIG_HERMITIAN_TOL:
        raise NotHermitian(magnitude=defect)

    h = (h + h.conj().T) / 2

    if h.shape == (2, 2):
        return _eig_2x2(h, vectors)

    if not vectors:
        return np.linalg.eigvalsh(h)[::-1]

    values, basis = np.linalg.eigh(h)
    log.trace("4×4 spectrum {}", values)
    return values[::-1], basis[:, ::-1]


def top_eigenvalue(h: np.ndarray) -> float:
    """Return the largest eigenvalue of a Hermitian matrix."""
    return float(eig_herm(h)[0])
