"""Complex linear algebra and state construction for two qubits."""

# Local
from .linalg import (
    PAULIS,
    SIGMA_X,
    SIGMA_Y,
    SIGMA_Z,
    IDENTITY,
    tensor,
    eig_herm,
    top_eigenvalue,
    bloch_operator,
    validate_density,
    validate_projector,
    partial_trace_alice,
    partial_transpose_bob,
)
from .states import (
    MAXIMALLY_MIXED,
    mix,
    make_state,
    optics_prep,
    flipped_state,
    schmidt_state,
    beta_for_alpha,
    state_from_matrix,
    computational_basis_projectors,
)
from .entanglement import negativity, is_entangled, schmidt_angle, schmidt_parameters

__all__ = (
    "IDENTITY",
    "MAXIMALLY_MIXED",
    "PAULIS",
    "SIGMA_X",
    "SIGMA_Y",
    "SIGMA_Z",
    "beta_for_alpha",
    "bloch_operator",
    "computational_basis_projectors",
    "eig_herm",
    "flipped_state",
    "is_entangled",
    "make_state",
    "mix",
    "negativity",
    "optics_prep",
    "partial_trace_alice",
    "partial_transpose_bob",
    "schmidt_angle",
    "schmidt_parameters",
    "schmidt_state",
    "state_from_matrix",
    "tensor",
    "top_eigenvalue",
    "validate_density",
    "validate_projector",
)
