"""Data models used throughout steerkit."""

# Standard Library
import json
from typing import Any

# Third Party
import numpy as np
from pydantic import BaseModel


def encode_array(value: np.ndarray) -> Any:
    """Encode a numpy array as JSON-friendly data.

    Complex arrays become row-major `[re, im]` pairs, real arrays plain lists.
    """
    if np.iscomplexobj(value):
        flat = np.asarray(value).reshape(-1)
        return [[float(v.real), float(v.imag)] for v in flat]
    return np.asarray(value).tolist()


class SteerkitModel(BaseModel):
    """Base model for all steerkit data models."""

    class Config:
        """Default Pydantic configuration.

        See https://pydantic-docs.helpmanual.io/usage/model_config
        """

        validate_all = True
        extra = "forbid"
        validate_assignment = True
        json_encoders = {
            np.ndarray: encode_array,
            np.floating: float,
            np.integer: int,
            complex: lambda v: [v.real, v.imag],
        }

    def export_json(self, *args, **kwargs) -> str:
        """Return instance as JSON."""

        export_kwargs = {
            "by_alias": True,
            "exclude_unset": False,
            **kwargs,
        }

        return self.json(*args, **export_kwargs)

    def export_dict(self, *args, **kwargs) -> dict:
        """Return instance as a JSON-compatible dictionary."""
        return json.loads(self.export_json(*args, **kwargs))


class SteerkitArrayModel(SteerkitModel):
    """Immutable model holding numpy arrays."""

    class Config:
        """Pydantic configuration for array-carrying models."""

        arbitrary_types_allowed = True
        allow_mutation = False
        validate_assignment = False
