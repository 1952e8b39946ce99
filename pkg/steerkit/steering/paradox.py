"""The steering paradox "k = 1" for pure entangled two-qubit states.

If k settings steer Bob to 2k distinct pure states, any LHS ensemble would
need a single hidden state per outcome, and the trace of the 2k equations
sums to 1. Quantum mechanically the same sum is k.
"""

# Standard Library
from itertools import combinations
from typing import Sequence

# Third Party
import numpy as np

# Project
from steerkit.log import log
from steerkit.qcore import schmidt_angle
from steerkit.constants import PURITY_TOL, FIDELITY_TOL, ENTANGLED_EPS
from steerkit.exceptions import (
    NotEntangled,
    InputInvalid,
    ZeroProbabilityBranch,
    ImpureConditionalState,
    CoincidentConditionalStates,
)
from steerkit.models.quantum import PureState
from steerkit.models.steering import ParadoxTerm, ParadoxReport, MeasurementDirection

# Local
from .assemblage import build_assemblage


def paradox_value(
    psi: PureState, directions: Sequence[MeasurementDirection]
) -> ParadoxReport:
    """Evaluate Σⱼ Σₐ tr[ρ̃ʲₐ ρʲₐ] for a pure entangled state.

    Raises a distinct precondition error for a product state, a mixed
    conditional state and coinciding conditional states.
    """
    if psi.dim != 4:
        raise InputInvalid("The paradox needs a two-qubit state, got dimension {dim}", dim=psi.dim)

    alpha = schmidt_angle(psi)
    if alpha <= ENTANGLED_EPS:
        raise NotEntangled(magnitude=alpha)

    assemblage = build_assemblage(psi.density, directions)

    labelled = []
    for j, a, state in assemblage:
        if not state.defined:
            raise ZeroProbabilityBranch(
                magnitude=state.probability, outcome=a, direction=str(state.direction)
            )
        purity = float(np.trace(state.normalized @ state.normalized).real)
        if purity < 1 - PURITY_TOL:
            raise ImpureConditionalState(
                magnitude=1 - purity, direction=str(state.direction), outcome=a
            )
        labelled.append((f"{state.direction}:{a}", state))

    for (first_label, first), (second_label, second) in combinations(labelled, 2):
        fidelity = float(np.trace(first.normalized @ second.normalized).real)
        if fidelity >= 1 - FIDELITY_TOL:
            raise CoincidentConditionalStates(
                magnitude=1 - fidelity, first=first_label, second=second_label
            )

    terms = [
        ParadoxTerm(
            direction=str(state.direction),
            outcome=a,
            probability=float(np.trace(state.unnormalized @ state.normalized).real),
        )
        for _, a, state in assemblage
    ]
    total = sum(term.probability for term in terms)

    log.debug("Paradox total {} over {} settings", total, assemblage.settings_count)

    return ParadoxReport(
        quantum_total=total,
        per_term=terms,
        settings_count=assemblage.settings_count,
    )
