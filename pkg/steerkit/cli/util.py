"""CLI utility functions."""

# Standard Library
import json
from typing import Any, Dict, Optional
from pathlib import Path
from functools import wraps

# Third Party
import click
from pydantic import ValidationError

# Project
from steerkit.log import log
from steerkit.qcore import make_state, state_from_matrix
from steerkit.constants import EXIT_CODE_MAP, __version__
from steerkit.exceptions import InputInvalid, SteerkitError, PreconditionViolated
from steerkit.models.quantum import ComplexMatrix, StateFamilySpec
from steerkit.models.steering import parse_angle, parse_directions

# Local
from .echo import error, success


class AngleType(click.ParamType):
    """Angle in radians, or degrees with a `deg` suffix."""

    name = "angle"

    def convert(self, value, param, ctx):
        """Convert to radians."""
        if isinstance(value, float):
            return value
        try:
            return parse_angle(str(value))
        except ValueError as err:
            self.fail(str(err), param, ctx)


class DirectionsType(click.ParamType):
    """Direction list such as `z,x`, `x,y,z` or `1.2,0.4;z`."""

    name = "directions"

    def convert(self, value, param, ctx):
        """Convert to a list of MeasurementDirection."""
        if isinstance(value, list):
            return value
        try:
            return parse_directions(str(value))
        except ValueError as err:
            self.fail(str(err), param, ctx)


class SignsType(click.ParamType):
    """Three comma-separated signs, e.g. `1,-1,-1` or `+,-,-`."""

    name = "signs"

    def convert(self, value, param, ctx):
        """Convert to a tuple of ±1."""
        if isinstance(value, tuple):
            return value
        table = {"+": 1, "-": -1, "1": 1, "+1": 1, "-1": -1}
        parts = [p.strip() for p in str(value).split(",")]
        if len(parts) != 3 or any(p not in table for p in parts):
            self.fail(f"'{value}' is not three signs like 1,-1,-1", param, ctx)
        return tuple(table[p] for p in parts)


ANGLE = AngleType()
DIRECTIONS = DirectionsType()
SIGNS = SignsType()


def handle_errors(func):
    """Map steerkit exceptions onto CLI exit codes."""

    @wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except PreconditionViolated as err:
            error(
                "Precondition {invariant} violated: {detail}",
                invariant=err.invariant,
                detail=err.message,
                exit_code=err.exit_code,
            )
        except SteerkitError as err:
            error("{detail}", detail=err.message, exit_code=err.exit_code)
        except ValidationError as err:
            error("Invalid input: {detail}", detail=str(err), exit_code=EXIT_CODE_MAP["usage"])

    return wrapper


def load_state_file(path: Path) -> ComplexMatrix:
    """Read a state matrix from JSON.

    Accepts a bare matrix `{"dim", "entries"}` or any document with a `state` key.
    """
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, ValueError) as err:
        raise InputInvalid("Cannot read state file {path}: {err}", path=str(path), err=err)
    if isinstance(data, dict) and "state" in data:
        data = data["state"]
    try:
        return ComplexMatrix(**data)
    except (TypeError, ValueError) as err:
        raise InputInvalid("Invalid state matrix in {path}: {err}", path=str(path), err=err)


def resolve_state(
    family: str,
    alpha: float,
    phi: float,
    visibility: float,
    state_file: Optional[Path],
):
    """Build the density matrix selected by the state options."""
    if state_file is not None:
        return state_from_matrix(load_state_file(state_file))
    if family == "raw":
        raise InputInvalid("--family raw needs --state-file")
    try:
        spec = StateFamilySpec(family=family, alpha=alpha, phase=phi, visibility=visibility)
    except ValueError as err:
        raise InputInvalid("Invalid state options: {err}", err=err)
    return make_state(spec)


def metadata(command: str, parameters: Dict[str, Any], seed: Optional[int] = None) -> Dict:
    """Return the metadata block embedded in every emitted document."""
    block = {
        "tool": "steerkit",
        "version": __version__,
        "command": command,
        "parameters": parameters,
    }
    if seed is not None:
        block["seed"] = seed
    return block


def _default(value):
    if hasattr(value, "export_dict"):
        return value.export_dict()
    if isinstance(value, Path):
        return str(value)
    if isinstance(value, (list, tuple)):
        return [_default(v) for v in value]
    return str(value)


def dump_json(document: Dict) -> str:
    """Serialize a document, converting models and paths."""
    return json.dumps(document, indent=2, default=_default)


def csv_with_metadata(body: str, meta: Dict) -> str:
    """Prefix CSV with `#`-comment metadata lines."""
    header = f"# {json.dumps(meta, default=_default)}\n"
    return header + body


def emit(text: str, out: Optional[Path]) -> None:
    """Write a document to `out`, or stdout."""
    if out is None:
        click.echo(text, nl=not text.endswith("\n"))
        return
    out = Path(out)
    out.write_text(text)
    log.info("Wrote {}", str(out))
    success("Wrote {path}", path=str(out))
