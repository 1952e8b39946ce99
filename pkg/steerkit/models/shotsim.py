"""Finite-shot simulation models."""

# Standard Library
from typing import List, Optional

# Third Party
from pydantic import StrictStr, PositiveInt, conint, validator

# Project
from steerkit.constants import MAX_SEED, GENERATOR_NAME

# Local
from .main import SteerkitModel
from .steering import MeasurementDirection

Seed = conint(ge=0, le=MAX_SEED)


class ShotSetting(SteerkitModel):
    """Alice's direction (None for a Bob-only measurement) and Bob's direction."""

    alice: Optional[MeasurementDirection]
    bob: MeasurementDirection
    label: Optional[StrictStr]


class ShotConfig(SteerkitModel):
    """Shots, seed and the ordered list of settings.

    Setting i is sampled from the substream (seed, i).
    """

    shots_per_setting: PositiveInt
    seed: Seed
    settings: List[ShotSetting]


class SettingCounts(SteerkitModel):
    """Outcome counts of one setting.

    Joint settings carry `[[n00, n01], [n10, n11]]` indexed [a][b]; Bob-only
    settings carry a single row `[[n0, n1]]`.
    """

    index: int
    alice: Optional[StrictStr]
    bob: StrictStr
    label: Optional[StrictStr]
    counts: List[List[int]]

    @validator("counts")
    def validate_counts(cls, value):
        """Counts are nonnegative."""
        if any(n < 0 for row in value for n in row):
            raise ValueError("counts must be nonnegative")
        return value

    @property
    def total(self) -> int:
        """Total number of shots recorded."""
        return sum(sum(row) for row in self.counts)


class EstimateReport(SteerkitModel):
    """Sampled estimate, its standard error and the analytic reference."""

    quantity: StrictStr
    estimate: float
    std_error: float
    shots: PositiveInt
    true_value: float
    seed: Seed
    generator: StrictStr = GENERATOR_NAME
    numpy_version: StrictStr
    settings: List[SettingCounts]

    @property
    def deviation(self) -> float:
        """Return |estimate − true_value| in standard errors."""
        if self.std_error == 0:
            return 0.0 if self.estimate == self.true_value else float("inf")
        return abs(self.estimate - self.true_value) / self.std_error
