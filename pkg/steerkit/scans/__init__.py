"""Threshold visibilities, region scans and their export."""

# Local
from .export import to_csv, rows_csv, region_csv, region_svg, curves_svg, thresholds_svg
from .region import scan_grids, region_scan, pure_state_curves
from .thresholds import (
    family_search,
    asym_vmax_glsi,
    crossover_alpha,
    asym_vmax_usual,
    threshold_curves,
    werner_vmin_glsi,
    thresholds_merged,
    werner_vmin_usual,
    symmetry_check_asymmetric,
)

__all__ = (
    "asym_vmax_glsi",
    "asym_vmax_usual",
    "crossover_alpha",
    "curves_svg",
    "family_search",
    "pure_state_curves",
    "region_csv",
    "region_scan",
    "region_svg",
    "rows_csv",
    "scan_grids",
    "symmetry_check_asymmetric",
    "threshold_curves",
    "thresholds_merged",
    "thresholds_svg",
    "to_csv",
    "werner_vmin_glsi",
    "werner_vmin_usual",
)
