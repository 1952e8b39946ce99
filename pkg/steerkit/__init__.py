"""steerkit: the EPR steering paradox and generalized linear steering inequalities.

Exact two-qubit linear algebra, assemblages and the steering paradox, exact
LHS bounds of the generalized linear steering inequality, threshold scans
for mixed-state families and finite-shot simulation.
"""

# Project
from steerkit.constants import METADATA, __version__

__all__ = ("METADATA", "__version__")
