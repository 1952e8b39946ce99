"""Finite-shot simulation of the steering experiments."""

# Local
from .sampling import (
    substream,
    check_shots,
    run_settings,
    sample_joint,
    sample_setting,
    sample_marginal,
    joint_probabilities,
    marginal_probabilities,
)
from .estimates import simulate_paradox, simulate_sprime3, estimate_correlator

__all__ = (
    "estimate_correlator",
    "joint_probabilities",
    "marginal_probabilities",
    "run_settings",
    "sample_joint",
    "sample_marginal",
    "sample_setting",
    "simulate_paradox",
    "simulate_sprime3",
    "substream",
    "check_shots",
)
