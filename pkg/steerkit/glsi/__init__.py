"""The generalized linear steering inequality."""

# Local
from .bound import c_pm, analytic_bound, classical_bound, usual_lsi_bound, lsi_from_glsi_bound
from .search import (
    SIGN_TUPLES,
    c_prime,
    phi_grid,
    theta_grid,
    sprime3_curve,
    detect_violation,
    golden_section_max,
)
from .evaluate import (
    glsi_value,
    correlators,
    sprime3_value,
    usual_lsi_value,
    glsi_value_bloch,
    sprime3_from_correlators,
)
from .instance import XYZ, bloch_vector, build_instance, bob_projectors

__all__ = (
    "SIGN_TUPLES",
    "XYZ",
    "analytic_bound",
    "bloch_vector",
    "bob_projectors",
    "build_instance",
    "c_pm",
    "c_prime",
    "classical_bound",
    "correlators",
    "detect_violation",
    "glsi_value",
    "glsi_value_bloch",
    "golden_section_max",
    "lsi_from_glsi_bound",
    "phi_grid",
    "sprime3_curve",
    "sprime3_from_correlators",
    "sprime3_value",
    "theta_grid",
    "usual_lsi_bound",
    "usual_lsi_value",
)
