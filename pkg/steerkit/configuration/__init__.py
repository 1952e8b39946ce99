"""steerkit Configuration."""

# Local
from .main import CONFIG_ENV, find_config, get_params, load_params
from .validation import validate_config

__all__ = ("CONFIG_ENV", "find_config", "get_params", "load_params", "validate_config")
