"""Alice's measurements, Bob's assemblages and the steering paradox."""

# Local
from .paradox import paradox_value
from .assemblage import check_distinct, build_assemblage, conditional_state
from .measurement import signed, projector

__all__ = (
    "build_assemblage",
    "check_distinct",
    "conditional_state",
    "paradox_value",
    "projector",
    "signed",
)
