"""Custom Pydantic Fields/Types."""

# Standard Library
import math

# Third Party
from pydantic import confloat, conint, constr

Outcome = conint(ge=0, le=1)

Radians = confloat(allow_inf_nan=False)

SchmidtAngle = confloat(ge=0.0, le=math.pi / 2)

ReferenceTheta = confloat(gt=0.0, lt=math.pi / 2)

StateFamily = constr(regex=r"^(pure|werner|asymmetric|raw)$")

ScanFamily = constr(regex=r"^(werner|asymmetric)$")

ThresholdMethod = constr(regex=r"^(usual_lsi_analytic|glsi_numeric)$")


class Visibility(float):
    """Visibility weight, clamped into [0, 1] instead of rejected."""

    @classmethod
    def __get_validators__(cls):
        """Pydantic custom field method."""
        yield cls.validate

    @classmethod
    def validate(cls, value):
        """Clamp a numeric visibility into the unit interval."""
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise TypeError("visibility must be a number")
        if math.isnan(value):
            raise ValueError("visibility must not be NaN")
        return cls(min(1.0, max(0.0, float(value))))

    def __repr__(self):
        """Stringify custom field representation."""
        return f"Visibility({super().__repr__()})"
