"""CSV and SVG export of scan results."""

# Standard Library
import io
import csv
import json
from typing import Any, List, Union, Optional, Sequence

# Third Party
import numpy as np

# Project
from steerkit.exceptions import InputInvalid
from steerkit.models.scans import CurvePoint, RegionTable, ThresholdCurvePoint

Rows = Sequence[Union[CurvePoint, ThresholdCurvePoint]]


def _format(value: Any) -> Any:
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, float):
        return repr(value)
    if value is None:
        return ""
    return value


def to_csv(records: Sequence[dict], fields: Sequence[str]) -> str:
    """Render dictionaries as CSV with a fixed header."""
    stream = io.StringIO()
    writer = csv.DictWriter(stream, fieldnames=list(fields), extrasaction="ignore", lineterminator="\n")
    writer.writeheader()
    for record in records:
        writer.writerow({field: _format(record.get(field)) for field in fields})
    return stream.getvalue()


def region_csv(table: RegionTable, fields: Sequence[str]) -> str:
    """Render a region table, one row per cell."""
    return to_csv([cell.dict() for cell in table.cells], fields)


def rows_csv(rows: Rows, fields: Sequence[str]) -> str:
    """Render curve or threshold rows."""
    return to_csv([row.dict() for row in rows], fields)


def _pyplot():
    try:
        # Third Party
        import matplotlib

        matplotlib.use("Agg")
        # Third Party
        import matplotlib.pyplot as plt
    except ImportError:
        raise InputInvalid(
            "SVG output needs matplotlib; install the 'plot' extra"
        ) from None
    return plt


def _svg(figure, metadata: Optional[dict] = None) -> str:
    plt = _pyplot()
    stream = io.StringIO()
    svg_metadata = {"Creator": "steerkit"}
    if metadata:
        svg_metadata["Description"] = json.dumps(metadata, default=str)
    figure.savefig(stream, format="svg", metadata=svg_metadata)
    plt.close(figure)
    return stream.getvalue()


def region_svg(table: RegionTable, metadata: Optional[dict] = None) -> str:
    """Heat map of GLSI violations with the usual-LSI region outlined."""
    plt = _pyplot()
    values = np.array(table.values)
    usual = np.array(table.detected_usual, dtype=float)

    figure, axes = plt.subplots(figsize=(6, 4.5))
    extent = (table.v_grid[0], table.v_grid[-1], table.alpha_grid[0], table.alpha_grid[-1])
    image = axes.imshow(values, origin="lower", aspect="auto", extent=extent, cmap="RdBu_r")
    axes.contour(table.v_grid, table.alpha_grid, values, levels=[0.0], colors="black")
    if usual.any() and not usual.all():
        axes.contour(table.v_grid, table.alpha_grid, usual, levels=[0.5], colors="grey", linestyles="dashed")
    axes.set_xlabel("visibility V")
    axes.set_ylabel("α (rad)")
    axes.set_title(f"{table.family}: S′₃ − C′")
    figure.colorbar(image, ax=axes)
    return _svg(figure, metadata)


def curves_svg(rows: List[CurvePoint], metadata: Optional[dict] = None) -> str:
    """Usual LSI value against √3 and the optimized GLSI violation."""
    plt = _pyplot()
    alphas = [row.alpha for row in rows]

    figure, axes = plt.subplots(figsize=(6, 4))
    axes.plot(alphas, [row.usual_value - row.usual_bound for row in rows], label="usual LSI − √3")
    axes.plot(alphas, [row.glsi_violation for row in rows], label="GLSI S′₃ − C′")
    axes.axhline(0.0, color="black", linewidth=0.5)
    axes.set_xlabel("α (rad)")
    axes.set_ylabel("violation")
    axes.legend()
    return _svg(figure, metadata)


def thresholds_svg(rows: List[ThresholdCurvePoint], metadata: Optional[dict] = None) -> str:
    """Usual and GLSI visibility thresholds against α."""
    plt = _pyplot()

    def series(name: str):
        kept = [(row.alpha, getattr(row, name)) for row in rows if getattr(row, name) != "undetectable"]
        return [a for a, _ in kept], [v for _, v in kept]

    figure, axes = plt.subplots(figsize=(6, 4))
    axes.plot(*series("usual_threshold"), label="usual LSI")
    axes.plot(*series("glsi_threshold"), label="GLSI")
    axes.set_xlabel("α (rad)")
    axes.set_ylabel("threshold V")
    axes.legend()
    return _svg(figure, metadata)
