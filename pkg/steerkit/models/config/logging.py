"""Validate logging configuration."""

# Standard Library
from typing import Optional

# Third Party
from pydantic import ByteSize, DirectoryPath, constr

# Local
from ..main import SteerkitModel

LogFormat = constr(regex=r"(text|json)")


class Logging(SteerkitModel):
    """Validation model for logging configuration.

    File logging is enabled only when `directory` is set.
    """

    directory: Optional[DirectoryPath]
    format: LogFormat = "text"
    max_size: ByteSize = "50MB"
