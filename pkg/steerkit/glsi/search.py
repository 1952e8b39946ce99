"""Maximization of S′₃ − C′_LHS over the reference angle θ."""

# Standard Library
import math
from typing import List, Tuple, Callable, Optional, Sequence
from itertools import product

# Third Party
import numpy as np

# Project
from steerkit.log import log
from steerkit.constants import THETA_TOL, THETA_STEPS, THETA_MARGIN, VIOLATION_TIE_TOL
from steerkit.exceptions import InputInvalid
from steerkit.models.glsi import Correlators, ViolationSearch

# Local
from .evaluate import correlators

INV_PHI = (math.sqrt(5) - 1) / 2
INV_PHI_SQUARE = (3 - math.sqrt(5)) / 2

SIGN_TUPLES = tuple(product((1, -1), repeat=3))


def golden_section_max(
    f: Callable[[float], float], a: float, b: float, tol: float = THETA_TOL
) -> Tuple[float, float]:
    """Locate the maximum of a unimodal `f` on [a, b] to within `tol`.

    Returns (x, f(x)) for the better of the two final interior points.
    """
    a, b = min(a, b), max(a, b)
    h = b - a
    if h <= tol:
        x = (a + b) / 2
        return x, f(x)

    steps = int(math.ceil(math.log(tol / h) / math.log(INV_PHI)))

    c = a + INV_PHI_SQUARE * h
    d = a + INV_PHI * h
    yc = f(c)
    yd = f(d)

    for _ in range(steps - 1):
        if yc >= yd:
            b = d
            d = c
            yd = yc
            h = INV_PHI * h
            c = a + INV_PHI_SQUARE * h
            yc = f(c)
        else:
            a = c
            c = d
            yc = yd
            h = INV_PHI * h
            d = a + INV_PHI * h
            yd = f(d)

    if yc >= yd:
        return c, yc
    return d, yd


def c_prime(theta) -> np.ndarray:
    """Return C′_LHS(θ) = max(C₊, C₋), vectorized over θ."""
    c2 = np.cos(2 * np.asarray(theta, dtype=float))
    c4 = 2 * c2 * c2 - 1
    return np.sqrt(np.maximum(4 + 4 * np.abs(c2) + c4, 0.0))


def sprime3_curve(corr: Correlators, theta, phi: float, signs: Sequence[int]) -> np.ndarray:
    """Return S′₃(θ) for fixed φ and signs, vectorized over θ."""
    theta = np.asarray(theta, dtype=float)
    sx, sy, sz = signs
    s2t, c2t = np.sin(2 * theta), np.cos(2 * theta)
    cp, sp = math.cos(phi), math.sin(phi)
    return (
        sx * s2t * (cp * corr.xx + sp * corr.xy)
        + sy * s2t * (sp * corr.yx - cp * corr.yy)
        + sz * corr.zz
        + 2 * c2t * corr.iz
    )


def phi_grid(steps: int) -> List[float]:
    """Return `steps` uniformly spaced φ values in [0, 2π)."""
    if steps < 1:
        raise InputInvalid("φ grid needs at least one point, got {steps}", steps=steps)
    return [2 * math.pi * i / steps for i in range(steps)]


def theta_grid(steps: int = THETA_STEPS, margin: float = THETA_MARGIN) -> np.ndarray:
    """Return the coarse θ grid on (margin, π/2 − margin), always containing π/4."""
    if steps < 3:
        raise InputInvalid("θ grid needs at least 3 points, got {steps}", steps=steps)
    grid = np.linspace(margin, math.pi / 2 - margin, steps)
    return np.union1d(grid, [math.pi / 4])


def _refine(
    corr: Correlators,
    grid: np.ndarray,
    phi: float,
    signs: Tuple[int, int, int],
    tol: float,
) -> Tuple[float, float]:
    values = sprime3_curve(corr, grid, phi, signs) - c_prime(grid)
    i = int(np.argmax(values))
    best_theta, best_value = float(grid[i]), float(values[i])

    lo, hi = grid[max(i - 1, 0)], grid[min(i + 1, len(grid) - 1)]

    def objective(theta: float) -> float:
        return float(sprime3_curve(corr, theta, phi, signs) - c_prime(theta))

    theta, value = golden_section_max(objective, lo, hi, tol)
    if value > best_value + VIOLATION_TIE_TOL:
        best_theta, best_value = theta, value
    return best_theta, best_value


def detect_violation(
    rho: np.ndarray,
    phis: Optional[Sequence[float]] = None,
    sign_flips: bool = True,
    theta_steps: int = THETA_STEPS,
    theta_margin: float = THETA_MARGIN,
    theta_tol: float = THETA_TOL,
) -> ViolationSearch:
    """Maximize S′₃(θ, φ; signs) − C′_LHS(θ).

    θ runs over a coarse grid on (margin, π/2 − margin) followed by
    golden-section refinement around the best grid point. `phis` defaults
    to [0]. With `sign_flips` the eight orientations of Alice's observables
    are searched too. Ties resolve toward smaller θ, then enumeration order.
    A positive violation certifies steering; a non-positive one is a result,
    not an error.
    """
    corr = correlators(rho)
    grid = theta_grid(theta_steps, theta_margin)
    phis = [0.0] if phis is None else [float(p) for p in phis]
    if not phis:
        raise InputInvalid("At least one φ value is required")
    sign_set = SIGN_TUPLES if sign_flips else ((1, 1, 1),)

    candidates = []
    for phi in phis:
        for signs in sign_set:
            theta, value = _refine(corr, grid, phi, signs, theta_tol)
            candidates.append((value, theta, phi, signs))

    best_value = max(value for value, *_ in candidates)
    value, theta, phi, signs = min(
        (c for c in candidates if c[0] >= best_value - VIOLATION_TIE_TOL),
        key=lambda c: c[1],
    )
    bound = float(c_prime(theta))

    log.debug(
        "Best violation {} at theta={}, phi={}, signs={}", value, theta, phi, signs
    )

    return ViolationSearch(
        theta_star=theta,
        phi_star=phi,
        signs=signs,
        violation=value,
        s3_prime=value + bound,
        c_lhs_prime=bound,
    )
