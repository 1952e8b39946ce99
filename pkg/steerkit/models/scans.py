"""Threshold, region scan and curve models."""

# Standard Library
from typing import List, Union, Literal, Optional

# Third Party
from pydantic import StrictBool, validator, root_validator

# Local
from .main import SteerkitModel
from .fields import Radians, ScanFamily, ThresholdMethod

Undetectable = Literal["undetectable"]


class ThresholdResult(SteerkitModel):
    """Visibility threshold at one Schmidt angle, or the undetectable variant."""

    alpha: Radians
    v_threshold: Union[float, Undetectable]
    method: ThresholdMethod
    theta_star: Optional[Radians]

    @validator("v_threshold")
    def validate_range(cls, value):
        """Thresholds live in the unit interval."""
        if value != "undetectable" and not 0.0 <= value <= 1.0:
            raise ValueError(f"threshold {value} outside [0, 1]")
        return value

    @property
    def undetectable(self) -> bool:
        """Return True when no visibility is detected."""
        return self.v_threshold == "undetectable"


class RegionCell(SteerkitModel):
    """One (α, V) cell of a region scan; field order is the CSV column order."""

    family: ScanFamily
    alpha: Radians
    visibility: float
    usual_value: float
    usual_bound: float
    usual_detected: StrictBool
    glsi_theta_star: Radians
    glsi_violation: float
    glsi_detected: StrictBool


class RegionTable(SteerkitModel):
    """Detection flags of the usual LSI and the GLSI over an (α, V) grid.

    `cells` is row-major: α outer, V inner.
    """

    family: ScanFamily
    alpha_grid: List[float]
    v_grid: List[float]
    cells: List[RegionCell]

    @root_validator(skip_on_failure=True)
    def validate_shape(cls, values):
        """One cell per grid point."""
        expected = len(values["alpha_grid"]) * len(values["v_grid"])
        if len(values["cells"]) != expected:
            raise ValueError(f"expected {expected} cells, got {len(values['cells'])}")
        return values

    def _matrix(self, field: str) -> List[List]:
        width = len(self.v_grid)
        return [
            [getattr(cell, field) for cell in self.cells[row * width : (row + 1) * width]]
            for row in range(len(self.alpha_grid))
        ]

    @property
    def detected_usual(self) -> List[List[bool]]:
        """Usual LSI detection flags indexed [alpha][visibility]."""
        return self._matrix("usual_detected")

    @property
    def detected_glsi(self) -> List[List[bool]]:
        """GLSI detection flags indexed [alpha][visibility]."""
        return self._matrix("glsi_detected")

    @property
    def values(self) -> List[List[float]]:
        """GLSI violation magnitudes indexed [alpha][visibility]."""
        return self._matrix("glsi_violation")


class CurvePoint(SteerkitModel):
    """Pure-state comparison of the usual LSI and the optimized GLSI."""

    alpha: Radians
    usual_value: float
    usual_bound: float
    glsi_violation: float
    glsi_theta_star: Radians

    @property
    def usual_detected(self) -> bool:
        """Usual LSI violated."""
        return self.usual_value > self.usual_bound

    @property
    def glsi_detected(self) -> bool:
        """GLSI violated."""
        return self.glsi_violation > 0


class ThresholdCurvePoint(SteerkitModel):
    """Usual and GLSI visibility thresholds at one Schmidt angle."""

    family: ScanFamily
    alpha: Radians
    usual_threshold: Union[float, Undetectable]
    glsi_threshold: Union[float, Undetectable]
    glsi_theta_star: Optional[Radians]
