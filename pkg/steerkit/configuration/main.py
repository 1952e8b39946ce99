"""Import the configuration file and return default values if undefined."""

# Standard Library
import os
from typing import Dict, Tuple, Optional
from pathlib import Path
from functools import lru_cache

# Third Party
import yaml

# Project
from steerkit.log import log, set_log_level, enable_file_logging
from steerkit.exceptions import ConfigError, ConfigMissing
from steerkit.models.config.params import Params

# Local
from .validation import validate_config

CONFIG_ENV = "STEERKIT_CONFIG"
CONFIG_NAME = "steerkit.yaml"


def config_candidates() -> Tuple[Path, ...]:
    """Return config file locations in order of precedence."""
    candidates = ()
    if os.environ.get(CONFIG_ENV):
        candidates += (Path(os.environ[CONFIG_ENV]),)
    candidates += (
        Path.home() / ".steerkit" / CONFIG_NAME,
        Path("/etc/steerkit") / CONFIG_NAME,
    )
    return candidates


def find_config() -> Optional[Path]:
    """Return the first existing config file, if any.

    An explicitly named file must exist.
    """
    explicit = os.environ.get(CONFIG_ENV)
    if explicit and not Path(explicit).is_file():
        raise ConfigMissing(missing_item=explicit)

    for candidate in config_candidates():
        if candidate.is_file():
            return candidate

    log.debug("No config file found, using defaults")
    return None


def _config_optional(config_path: Optional[Path]) -> Dict:

    config = {}

    if config_path is None:
        return config

    try:
        with config_path.open("r") as cf:
            config = yaml.safe_load(cf) or {}

    except (yaml.YAMLError, yaml.MarkedYAMLError) as yaml_error:
        raise ConfigError(str(yaml_error))

    if not isinstance(config, dict):
        raise ConfigError("{path} must contain a mapping", path=str(config_path))

    return config


def load_params(config_path: Optional[Path] = None) -> Params:
    """Load, validate and apply the configuration file."""
    path = config_path or find_config()
    user_config = _config_optional(path)

    # Read raw debug value from config to enable debugging quickly.
    set_log_level(logger=log, debug=bool(user_config.get("debug", False)))

    log.debug("Unvalidated configuration from {}: {}", path, user_config)
    params = validate_config(config=user_config, importer=Params)

    if params.logging.directory is not None:
        enable_file_logging(
            logger=log,
            log_directory=params.logging.directory,
            log_format=params.logging.format,
            log_max_size=params.logging.max_size,
        )

    return params


@lru_cache(maxsize=1)
def get_params() -> Params:
    """Return the process-wide configuration, loading it once."""
    return load_params()
