"""Custom exceptions for steerkit."""

# Standard Library
import json as _json
from typing import Any, Dict, List, Optional

# Project
from steerkit.log import log
from steerkit.constants import EXIT_CODE_MAP


def validation_error_message(*errors: Dict) -> str:
    """Parse errors return from pydantic.ValidationError.errors()."""

    errs = ("\n",)

    for err in errors:
        loc = " → ".join(str(loc) for loc in err["loc"])
        errs += (f'Field: {loc}\n  Error: {err["msg"]}\n',)

    return "\n".join(errs)


class SteerkitError(Exception):
    """steerkit base exception."""

    _kind = "usage"

    def __init__(
        self,
        message: str = "",
        level: str = "warning",
        keywords: Optional[List[Any]] = None,
    ) -> None:
        """Initialize the steerkit base exception class."""
        self._message = message
        self._level = level
        self._keywords = keywords or []
        if self._level == "warning":
            log.error(repr(self))
        elif self._level == "danger":
            log.critical(repr(self))
        else:
            log.info(repr(self))
        super().__init__(message)

    def __str__(self) -> str:
        """Return the instance's error message."""
        return self._message

    def __repr__(self) -> str:
        """Return the instance's severity & error message in a string."""
        return f"[{self.level.upper()}] {self._message}"

    def dict(self) -> Dict:
        """Return the instance's attributes as a dictionary."""
        return {
            "message": self._message,
            "level": self._level,
            "keywords": [str(k) for k in self._keywords],
        }

    def json(self) -> str:
        """Return the instance's attributes as a JSON object."""
        return _json.dumps(self.dict())

    @property
    def message(self) -> str:
        """Return the instance's `message` attribute."""
        return self._message

    @property
    def level(self) -> str:
        """Return the instance's `level` attribute."""
        return self._level

    @property
    def keywords(self) -> List[Any]:
        """Return the instance's `keywords` attribute."""
        return self._keywords

    @property
    def exit_code(self) -> int:
        """Return the CLI exit status for this class of error."""
        return EXIT_CODE_MAP.get(self._kind, 1)


class _UnformattedSteerkitError(SteerkitError):
    """Base exception class for freeform error messages."""

    _level = "warning"

    def __init__(
        self, unformatted_msg: str = "", level: Optional[str] = None, **kwargs
    ) -> None:
        """Format error message with keyword arguments."""
        self._message = unformatted_msg.format(**kwargs)
        self._level = level or self._level
        self._keywords = list(kwargs.values())
        super().__init__(
            message=self._message, level=self._level, keywords=self._keywords
        )


class _PredefinedSteerkitError(SteerkitError):
    _message = "undefined"
    _level = "warning"

    def __init__(self, level: Optional[str] = None, **kwargs) -> None:
        self._fmt_msg = self._message.format(**kwargs)
        self._level = level or self._level
        self._keywords = list(kwargs.values())
        super().__init__(
            message=self._fmt_msg, level=self._level, keywords=self._keywords
        )


class ConfigInvalid(SteerkitError):
    """Raised when a config item fails type or option validation."""

    _kind = "config"

    def __init__(self, errors: List[Dict]) -> None:
        """Parse Pydantic ValidationError."""

        super().__init__(message=validation_error_message(*errors))


class ConfigError(_UnformattedSteerkitError):
    """Raised for generic user-config issues."""

    _kind = "config"


class ConfigMissing(_PredefinedSteerkitError):
    """Raised when a required config file or item is missing or undefined."""

    _kind = "config"
    _message = "{missing_item} is missing or undefined."


class InputInvalid(_UnformattedSteerkitError):
    """Raised when an argument is malformed or out of range."""


class PreconditionViolated(_PredefinedSteerkitError):
    """Raised when an input fails a documented invariant.

    `invariant` names the violated property and `magnitude` carries the
    measured deviation, so callers can report both.
    """

    _kind = "precondition"
    _invariant = "precondition"
    _message = "Precondition '{invariant}' violated (measured {magnitude:.3e})"

    def __init__(self, magnitude: float = float("nan"), **kwargs) -> None:
        """Record the violated invariant and its measured magnitude."""
        self.magnitude = float(magnitude)
        super().__init__(invariant=self._invariant, magnitude=self.magnitude, **kwargs)

    @property
    def invariant(self) -> str:
        """Return the name of the violated invariant."""
        return self._invariant

    def dict(self) -> Dict:
        """Include the invariant name and magnitude."""
        return {
            **super().dict(),
            "invariant": self._invariant,
            "magnitude": self.magnitude,
        }


class NotHermitian(PreconditionViolated):
    """Raised when a matrix is not Hermitian within tolerance."""

    _invariant = "hermitian"
    _message = "Matrix is not Hermitian: max |H - H†| = {magnitude:.3e}"


class NotDensityMatrix(PreconditionViolated):
    """Raised when a matrix fails the density-matrix checks."""

    _invariant = "density"
    _message = "Not a density matrix ({check}): deviation {magnitude:.3e}"


class NotProjector(PreconditionViolated):
    """Raised when a matrix is not a rank-1 projector."""

    _invariant = "projector"
    _message = "Not a rank-1 projector ({check}): deviation {magnitude:.3e}"


class ProbabilityMismatch(PreconditionViolated):
    """Raised when mixing probabilities are negative or do not sum to one."""

    _invariant = "probability_sum"
    _message = "Mixing probabilities invalid ({check}): deviation {magnitude:.3e}"


class DuplicateDirections(PreconditionViolated):
    """Raised when two measurement directions coincide up to sign."""

    _invariant = "distinct_directions"
    _message = (
        "Directions {first} and {second} coincide up to sign "
        "(angular separation {magnitude:.3e} rad)"
    )


class ZeroProbabilityBranch(PreconditionViolated):
    """Raised when a normalized conditional state is requested for p = 0."""

    _invariant = "nonzero_probability"
    _message = "Outcome {outcome} along {direction} has probability {magnitude:.3e}"


class NotEntangled(PreconditionViolated):
    """Raised when a pure state is (numerically) a product state."""

    _invariant = "entangled"
    _message = "State is not entangled: Schmidt angle {magnitude:.3e} rad"


class ImpureConditionalState(PreconditionViolated):
    """Raised when a normalized conditional state is mixed."""

    _invariant = "pure_conditional_states"
    _message = "Conditional state ({direction}, {outcome}) has purity deficit {magnitude:.3e}"


class CoincidentConditionalStates(PreconditionViolated):
    """Raised when two normalized conditional states coincide."""

    _invariant = "distinct_conditional_states"
    _message = "Conditional states {first} and {second} coincide (1 - fidelity = {magnitude:.3e})"


class DegenerateReference(PreconditionViolated):
    """Raised when a reference state yields an unnormalizable Bob state."""

    _invariant = "reference_normalization"
    _message = "Reference conditional state for {direction} has norm {magnitude:.3e}"


class EnumerationTooLarge(PreconditionViolated):
    """Raised when 2^k deterministic strategies are too many to enumerate."""

    _invariant = "enumerable"
    _message = "Cannot enumerate 2^{magnitude:.0f} strategies (limit k <= {limit})"
