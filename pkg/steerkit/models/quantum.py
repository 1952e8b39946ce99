"""Matrix, pure-state and state-family models."""

# Standard Library
import math
from typing import List, Tuple, Optional

# Third Party
import numpy as np
from pydantic import StrictInt, StrictFloat, validator, root_validator

# Project
from steerkit.constants import NORM_TOL

# Local
from .main import SteerkitModel, SteerkitArrayModel
from .fields import Radians, Visibility, StateFamily, SchmidtAngle


class ComplexMatrix(SteerkitModel):
    """Serialized dense complex matrix, row-major `[re, im]` entries."""

    dim: StrictInt
    entries: List[Tuple[float, float]]

    @validator("dim")
    def validate_dim(cls, value):
        """Only single- and two-qubit operators are supported."""
        if value not in (2, 4):
            raise ValueError(f"dim must be 2 or 4, got {value}")
        return value

    @validator("entries")
    def validate_entries(cls, value, values):
        """Ensure there are exactly dim² entries."""
        dim = values.get("dim")
        if dim is not None and len(value) != dim * dim:
            raise ValueError(f"expected {dim * dim} entries, got {len(value)}")
        return value

    def to_array(self) -> np.ndarray:
        """Return the matrix as a complex numpy array."""
        flat = np.array([complex(re, im) for re, im in self.entries], dtype=complex)
        return flat.reshape(self.dim, self.dim)

    @classmethod
    def from_array(cls, matrix: np.ndarray) -> "ComplexMatrix":
        """Build the serialized form of a square complex array."""
        matrix = np.asarray(matrix, dtype=complex)
        return cls(
            dim=matrix.shape[0],
            entries=[(float(v.real), float(v.imag)) for v in matrix.reshape(-1)],
        )


class PureState(SteerkitArrayModel):
    """Unit-norm state vector of one or two qubits."""

    dim: StrictInt
    amplitudes: np.ndarray

    @root_validator(skip_on_failure=True)
    def validate_amplitudes(cls, values):
        """Ensure shape matches dim and the vector is normalized."""
        dim = values["dim"]
        amplitudes = np.asarray(values["amplitudes"], dtype=complex).reshape(-1)
        if dim not in (2, 4) or amplitudes.shape != (dim,):
            raise ValueError(f"amplitudes must have shape ({dim},) with dim 2 or 4")
        norm = np.linalg.norm(amplitudes)
        if abs(norm - 1.0) > NORM_TOL:
            raise ValueError(f"state norm {norm!r} differs from 1 by more than {NORM_TOL}")
        amplitudes.setflags(write=False)
        values["amplitudes"] = amplitudes
        return values

    @classmethod
    def from_amplitudes(cls, amplitudes, normalize: bool = True) -> "PureState":
        """Create a state, optionally renormalizing the amplitudes first."""
        vector = np.asarray(amplitudes, dtype=complex).reshape(-1)
        if normalize:
            norm = np.linalg.norm(vector)
            if norm == 0:
                raise ValueError("cannot normalize the zero vector")
            vector = vector / norm
        return cls(dim=vector.shape[0], amplitudes=vector)

    @property
    def density(self) -> np.ndarray:
        """Return the rank-1 density matrix |ψ⟩⟨ψ|."""
        return np.outer(self.amplitudes, self.amplitudes.conj())


class StateFamilySpec(SteerkitModel):
    """Parameters of a two-qubit state family."""

    family: StateFamily = "pure"
    alpha: SchmidtAngle = math.pi / 4
    phase: Radians = 0.0
    visibility: Visibility = 1.0
    raw_matrix: Optional[ComplexMatrix]

    @validator("raw_matrix", always=True)
    def validate_raw_matrix(cls, value, values):
        """The raw family needs a 4×4 matrix; the others must not carry one."""
        family = values.get("family")
        if family == "raw":
            if value is None:
                raise ValueError("family 'raw' requires raw_matrix")
            if value.dim != 4:
                raise ValueError("raw_matrix must be 4×4")
        elif value is not None:
            raise ValueError(f"raw_matrix is only valid for family 'raw', not {family!r}")
        return value


class WavePlates(SteerkitModel):
    """Half-wave plate rotation angles in degrees."""

    hwp1_deg: StrictFloat = 0.0
    hwp2_deg: StrictFloat
    hwp3_deg: StrictFloat = 45.0


class OpticsPreparation(SteerkitArrayModel):
    """Result of the asymmetric-loss interferometer preparation."""

    beta: float
    alpha: float
    state: PureState
    transmission: float
    wave_plates: WavePlates

    def summary(self) -> dict:
        """Return the JSON-friendly fields of the preparation."""
        return {
            "beta": self.beta,
            "alpha": self.alpha,
            "transmission": self.transmission,
            "state": ComplexMatrix.from_array(self.state.density).dict(),
            "amplitudes": [[float(a.real), float(a.imag)] for a in self.state.amplitudes],
            "wave_plates": self.wave_plates.dict(),
        }
