"""All Data Models used by steerkit."""

# Local
from .main import SteerkitModel, SteerkitArrayModel, encode_array

__all__ = ("SteerkitModel", "SteerkitArrayModel", "encode_array")
