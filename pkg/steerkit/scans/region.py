"""(α, V) region scans and pure-state curves."""

# Standard Library
import os
import math
from typing import List, Iterable
from concurrent.futures import ThreadPoolExecutor

# Third Party
import numpy as np

# Project
from steerkit.log import log
from steerkit.glsi import SIGN_TUPLES, detect_violation, usual_lsi_value
from steerkit.qcore import make_state
from steerkit.constants import USUAL_LSI_BOUND, SCAN_ALPHA_START, ASYMMETRIC_V_CEILING
from steerkit.exceptions import InputInvalid
from steerkit.models.scans import CurvePoint, RegionCell, RegionTable
from steerkit.models.quantum import StateFamilySpec


def scan_grids(alpha_steps: int, v_steps: int):
    """Return the α grid on [0.01, π/4] and the V grid on [0, 1]."""
    if alpha_steps < 2 or v_steps < 2:
        raise InputInvalid(
            "Grid sizes must be at least 2, got {a}×{v}", a=alpha_steps, v=v_steps
        )
    alpha_grid = np.linspace(SCAN_ALPHA_START, math.pi / 4, alpha_steps).tolist()
    v_grid = np.linspace(0.0, 1.0, v_steps).tolist()
    return alpha_grid, v_grid


def _cell(family: str, alpha: float, v: float, search: dict) -> RegionCell:
    evaluated = v
    if family == "asymmetric" and v > ASYMMETRIC_V_CEILING:
        # Alice's bit flip maps V to 1 − V; the sign-maximized values are identical.
        evaluated = 1 - v

    rho = make_state(StateFamilySpec(family=family, alpha=alpha, visibility=evaluated))
    usual = max(usual_lsi_value(rho, signs) for signs in SIGN_TUPLES)
    result = detect_violation(rho, **search)

    return RegionCell(
        family=family,
        alpha=alpha,
        visibility=v,
        usual_value=usual,
        usual_bound=USUAL_LSI_BOUND,
        usual_detected=usual > USUAL_LSI_BOUND,
        glsi_theta_star=result.theta_star,
        glsi_violation=result.violation,
        glsi_detected=result.detected,
    )


def region_scan(
    family: str, alpha_steps: int = 50, v_steps: int = 50, threads: int = 0, **search
) -> RegionTable:
    """Evaluate usual-LSI and GLSI detection on every grid cell.

    Rows of constant α are spread over a thread pool; output order is fixed
    by the grid, whatever the number of workers.
    """
    if family not in ("werner", "asymmetric"):
        raise InputInvalid("Region scans support werner and asymmetric, got '{family}'", family=family)

    alpha_grid, v_grid = scan_grids(alpha_steps, v_steps)
    workers = threads or os.cpu_count() or 1

    def row(alpha: float) -> List[RegionCell]:
        return [_cell(family, alpha, v, search) for v in v_grid]

    log.info("Scanning {} over {}×{} cells with {} workers", family, alpha_steps, v_steps, workers)

    with ThreadPoolExecutor(max_workers=workers) as executor:
        rows = list(executor.map(row, alpha_grid))

    return RegionTable(
        family=family,
        alpha_grid=alpha_grid,
        v_grid=v_grid,
        cells=[cell for cells in rows for cell in cells],
    )


def pure_state_curves(alpha_grid: Iterable[float], **search) -> List[CurvePoint]:
    """Compare the usual LSI value 1 + 2 sin 2α with the optimized GLSI violation."""
    points = []
    for alpha in alpha_grid:
        if not 0 < alpha <= math.pi / 4 + 1e-15:
            raise InputInvalid("Schmidt angle α={alpha} outside (0, π/4]", alpha=alpha)
        rho = make_state(StateFamilySpec(family="pure", alpha=alpha))
        result = detect_violation(rho, **search)
        points.append(
            CurvePoint(
                alpha=alpha,
                usual_value=usual_lsi_value(rho),
                usual_bound=USUAL_LSI_BOUND,
                glsi_violation=result.violation,
                glsi_theta_star=result.theta_star,
            )
        )
    return points
