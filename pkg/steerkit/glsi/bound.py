"""Exact LHS bounds by deterministic-strategy enumeration."""

# Standard Library
import math
from typing import Tuple
from itertools import product

# Third Party
import numpy as np

# Project
from steerkit.log import log
from steerkit.qcore import top_eigenvalue
from steerkit.constants import PROJECTOR_TOL, STRATEGY_TIE_TOL, MAX_ENUMERATION_K
from steerkit.exceptions import InputInvalid, EnumerationTooLarge
from steerkit.models.glsi import BoundResult, LhsStrategy, GlsiInstance


def classical_bound(instance: GlsiInstance) -> BoundResult:
    """Maximize the top eigenvalue of Σⱼ Πʲ_{aⱼ} over all 2ᵏ assignments.

    A linear functional over LHS assemblages peaks at a deterministic
    response with a single hidden state, so this is the exact C_LHS.
    Every assignment within 1e-9 of the maximum is returned.
    """
    k = instance.k
    if k > MAX_ENUMERATION_K:
        raise EnumerationTooLarge(magnitude=k, limit=MAX_ENUMERATION_K)

    projectors = np.array([list(pair) for pair in instance.bob_projectors])
    assignments = np.array(list(product((0, 1), repeat=k)), dtype=int)
    aggregates = projectors[np.arange(k), assignments].sum(axis=1)
    tops = np.linalg.eigvalsh(aggregates)[:, -1]

    best = float(tops.max())
    maximizing = [
        LhsStrategy(
            assignment=tuple(int(a) for a in assignments[i]),
            aggregate=aggregates[i],
            max_eigenvalue=top_eigenvalue(aggregates[i]),
        )
        for i in np.flatnonzero(tops >= best - STRATEGY_TIE_TOL)
    ]
    c_lhs = max(strategy.max_eigenvalue for strategy in maximizing)

    log.debug(
        "C_LHS={} at theta={} from {} of {} strategies",
        c_lhs,
        instance.theta,
        len(maximizing),
        len(assignments),
    )
    return BoundResult(c_lhs=c_lhs, maximizing=maximizing)


def c_pm(theta: float) -> Tuple[float, float]:
    """Return C± = √(4 ± 4 cos 2θ + cos 4θ) for the {x̂, ŷ, ẑ} family."""
    c2, c4 = math.cos(2 * theta), math.cos(4 * theta)
    return math.sqrt(4 + 4 * c2 + c4), math.sqrt(max(0.0, 4 - 4 * c2 + c4))


def analytic_bound(theta: float) -> float:
    """Closed-form C_LHS = max{(3 + C₊)/2, (3 + C₋)/2} for {x̂, ŷ, ẑ}."""
    return (3 + max(c_pm(theta))) / 2


def lsi_from_glsi_bound(k: int, c_lhs: float) -> float:
    """Return the usual LSI bound 2·C_LHS − k implied at θ = π/4."""
    return 2 * c_lhs - k


def usual_lsi_bound(instance: GlsiInstance) -> float:
    """Maximize |Σⱼ Aⱼ m̂ʲ₊| over A ∈ {±1}ᵏ.

    Only meaningful when every pair of Bloch vectors is antiparallel.
    """
    defect = instance.antiparallel_defect()
    if defect > PROJECTOR_TOL:
        raise InputInvalid(
            "The usual LSI bound needs antiparallel Bloch vectors (θ = π/4), "
            "deviation {defect:.3e}",
            defect=defect,
        )
    if instance.k > MAX_ENUMERATION_K:
        raise EnumerationTooLarge(magnitude=instance.k, limit=MAX_ENUMERATION_K)

    plus = np.array([vectors[0] for vectors in instance.bloch_vectors])
    signs = np.array(list(product((1, -1), repeat=instance.k)), dtype=float)
    return float(np.linalg.norm(signs @ plus, axis=1).max())
