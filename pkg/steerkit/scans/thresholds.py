"""Visibility thresholds for the Werner and asymmetric families."""

# Standard Library
import math
from typing import List, Tuple, Callable, Iterable, Optional

# Project
from steerkit.log import log
from steerkit.glsi import detect_violation
from steerkit.qcore import make_state
from steerkit.constants import (
    MERGE_TOL,
    CROSSOVER_TOL,
    BISECTION_TOL,
    ALPHA_BOUNDARY,
    ASYMMETRIC_V_CEILING,
)
from steerkit.exceptions import InputInvalid
from steerkit.models.glsi import ViolationSearch
from steerkit.models.scans import ThresholdResult, ThresholdCurvePoint
from steerkit.models.quantum import StateFamilySpec


def _check_alpha(alpha: float) -> None:
    if not 0 < alpha <= math.pi / 4 + 1e-15:
        raise InputInvalid("Schmidt angle α={alpha} outside (0, π/4]", alpha=alpha)


def _check_tol(tol: float) -> None:
    if tol < BISECTION_TOL:
        raise InputInvalid("Bisection tolerance {tol} below {floor}", tol=tol, floor=BISECTION_TOL)


def family_search(family: str, alpha: float, v: float, **search) -> ViolationSearch:
    """Run the violation search on one member of a mixed-state family."""
    rho = make_state(StateFamilySpec(family=family, alpha=alpha, visibility=v))
    return detect_violation(rho, **search)


def _bisect(
    detected: Callable[[float], Optional[ViolationSearch]],
    inside: float,
    outside: float,
    tol: float,
) -> Tuple[float, ViolationSearch]:
    """Shrink [inside, outside] around the detection boundary.

    `inside` must be detected and `outside` not; the result is the midpoint
    of the final bracket together with the search at the detected end.
    """
    inside_search = detected(inside)
    while abs(outside - inside) > tol:
        middle = (inside + outside) / 2
        search = detected(middle)
        if search is not None:
            inside, inside_search = middle, search
        else:
            outside = middle
    return (inside + outside) / 2, inside_search


def werner_vmin_usual(alpha: float) -> ThresholdResult:
    """Return V_min = √3/(1 + 2 sin 2α) for the usual LSI."""
    _check_alpha(alpha)
    value = math.sqrt(3) / (1 + 2 * math.sin(2 * alpha))
    if value > 1 + 1e-12:
        return ThresholdResult(alpha=alpha, v_threshold="undetectable", method="usual_lsi_analytic")
    return ThresholdResult(alpha=alpha, v_threshold=min(value, 1.0), method="usual_lsi_analytic")


def werner_vmin_glsi(alpha: float, tol: float = BISECTION_TOL, **search) -> ThresholdResult:
    """Bisect V ∈ [0, 1] for the smallest Werner visibility the GLSI detects."""
    _check_alpha(alpha)
    _check_tol(tol)

    def detected(v: float) -> Optional[ViolationSearch]:
        result = family_search("werner", alpha, v, **search)
        return result if result.detected else None

    if detected(1.0) is None:
        return ThresholdResult(alpha=alpha, v_threshold="undetectable", method="glsi_numeric")

    v_min, at = _bisect(detected, 1.0, 0.0, tol)
    log.debug("Werner GLSI V_min={} at alpha={} (theta*={})", v_min, alpha, at.theta_star)
    return ThresholdResult(
        alpha=alpha, v_threshold=v_min, method="glsi_numeric", theta_star=at.theta_star
    )


def asym_vmax_usual(alpha: float) -> ThresholdResult:
    """Return V_max = (1 − √3 + 2 sin 2α)/(2(1 + sin 2α)) on the V < 1/2 branch."""
    _check_alpha(alpha)
    s = math.sin(2 * alpha)
    value = (1 - math.sqrt(3) + 2 * s) / (2 * (1 + s))
    if value < -1e-12:
        return ThresholdResult(alpha=alpha, v_threshold="undetectable", method="usual_lsi_analytic")
    return ThresholdResult(alpha=alpha, v_threshold=max(value, 0.0), method="usual_lsi_analytic")


def asym_vmax_glsi(alpha: float, tol: float = BISECTION_TOL, **search) -> ThresholdResult:
    """Bisect V ∈ [0, 1/2) for the largest asymmetric visibility the GLSI detects.

    The branch V ∈ (1/2, 1] mirrors this one under V ⇌ 1 − V.
    """
    _check_alpha(alpha)
    _check_tol(tol)

    def detected(v: float) -> Optional[ViolationSearch]:
        result = family_search("asymmetric", alpha, v, **search)
        return result if result.detected else None

    if detected(0.0) is None:
        return ThresholdResult(alpha=alpha, v_threshold="undetectable", method="glsi_numeric")

    v_max, at = _bisect(detected, 0.0, ASYMMETRIC_V_CEILING, tol)
    log.debug("Asymmetric GLSI V_max={} at alpha={} (theta*={})", v_max, alpha, at.theta_star)
    return ThresholdResult(
        alpha=alpha, v_threshold=v_max, method="glsi_numeric", theta_star=at.theta_star
    )


def symmetry_check_asymmetric(alpha: float, v: float, **search) -> bool:
    """Return True when detection at (α, V) and (α, 1 − V) agree."""
    if not 0 <= v <= 1:
        raise InputInvalid("Visibility {v} outside [0, 1]", v=v)
    first = family_search("asymmetric", alpha, v, **search)
    second = family_search("asymmetric", alpha, 1 - v, **search)
    return first.detected == second.detected


_THRESHOLDS = {
    "werner": (werner_vmin_usual, werner_vmin_glsi),
    "asymmetric": (asym_vmax_usual, asym_vmax_glsi),
}


def _thresholds(family: str) -> Tuple[Callable, Callable]:
    if family not in _THRESHOLDS:
        raise InputInvalid("No thresholds for family '{family}'", family=family)
    return _THRESHOLDS[family]


def thresholds_merged(
    family: str,
    alpha: float,
    tol: float = BISECTION_TOL,
    merge_tol: float = MERGE_TOL,
    **search,
) -> bool:
    """Return True when the GLSI and usual thresholds differ by at most `merge_tol`.

    `tol` is the bisection tolerance of the numeric threshold and must not
    exceed half of `merge_tol`.
    """
    if merge_tol < 2 * tol:
        raise InputInvalid(
            "Merge tolerance {m} below twice the bisection tolerance {t}", m=merge_tol, t=tol
        )
    usual_fn, glsi_fn = _thresholds(family)
    usual, glsi = usual_fn(alpha), glsi_fn(alpha, tol, **search)
    if usual.undetectable or glsi.undetectable:
        return usual.undetectable and glsi.undetectable
    return abs(glsi.v_threshold - usual.v_threshold) <= merge_tol


def crossover_alpha(
    family: str,
    tol: float = BISECTION_TOL,
    alpha_tol: float = CROSSOVER_TOL,
    merge_tol: float = MERGE_TOL,
    **search,
) -> float:
    """Locate the smallest α ∈ [α₀, π/4] above which both thresholds agree.

    α₀ = arcsin((√3 − 1)/2)/2 is where the usual LSI stops detecting. The
    GLSI threshold approaches the usual one smoothly, so "agree" means a gap
    of at most `merge_tol`.
    """
    _thresholds(family)
    lo, hi = ALPHA_BOUNDARY, math.pi / 4
    while hi - lo > alpha_tol:
        middle = (lo + hi) / 2
        if thresholds_merged(family, middle, tol, merge_tol, **search):
            hi = middle
        else:
            lo = middle
        log.debug("{} crossover bracket [{}, {}]", family, lo, hi)
    return (lo + hi) / 2


def threshold_curves(
    family: str, alpha_grid: Iterable[float], tol: float = BISECTION_TOL, **search
) -> List[ThresholdCurvePoint]:
    """Tabulate usual and GLSI thresholds over an α grid."""
    usual_fn, glsi_fn = _thresholds(family)
    rows = []
    for alpha in alpha_grid:
        usual, glsi = usual_fn(alpha), glsi_fn(alpha, tol, **search)
        rows.append(
            ThresholdCurvePoint(
                family=family,
                alpha=alpha,
                usual_threshold=usual.v_threshold,
                glsi_threshold=glsi.v_threshold,
                glsi_theta_star=glsi.theta_star,
            )
        )
    log.info("Computed {} {} threshold points", len(rows), family)
    return rows
