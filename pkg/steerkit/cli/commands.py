"""CLI Command definitions."""

# Standard Library
import sys
import math
from pathlib import Path

# Third Party
from click import Choice, IntRange, group, option, help_option, pass_context
from click import Path as PathType

# Project
from steerkit.log import log, set_log_level
from steerkit.glsi import (
    XYZ,
    phi_grid,
    c_pm,
    build_instance,
    sprime3_value,
    classical_bound,
    usual_lsi_value,
    detect_violation,
    lsi_from_glsi_bound,
)
from steerkit.qcore import optics_prep, schmidt_state, beta_for_alpha
from steerkit.scans import (
    rows_csv,
    curves_svg,
    region_csv,
    region_svg,
    scan_grids,
    region_scan,
    thresholds_svg,
    threshold_curves,
    pure_state_curves,
)
from steerkit.shotsim import simulate_paradox, simulate_sprime3
from steerkit.steering import paradox_value
from steerkit.constants import (
    MAX_SEED,
    SCAN_FAMILIES,
    USUAL_LSI_BOUND,
    SCAN_ALPHA_START,
    CURVES_CSV_FIELDS,
    REGION_CSV_FIELDS,
    SUPPORTED_FAMILIES,
    THRESHOLD_CSV_FIELDS,
)
from steerkit.exceptions import InputInvalid
from steerkit.configuration import get_params
from steerkit.models.quantum import ComplexMatrix

# Local
from .echo import info, label, warning, cmd_help
from .util import (
    ANGLE,
    SIGNS,
    DIRECTIONS,
    emit,
    metadata,
    dump_json,
    handle_errors,
    resolve_state,
    csv_with_metadata,
)
from .static import CLI_HELP, E

supports_color = "utf" in sys.getfilesystemencoding().lower()

state_options = (
    option("--family", type=Choice(SUPPORTED_FAMILIES), default="pure", show_default=True, help="State family"),
    option("--alpha", type=ANGLE, default=math.pi / 4, show_default="π/4", help="Schmidt angle α"),
    option("--phi", type=ANGLE, default=0.0, show_default=True, help="Phase φ of the state"),
    option("--visibility", type=float, default=1.0, show_default=True, help="Visibility V"),
    option(
        "--state-file",
        type=PathType(exists=True, dir_okay=False, path_type=Path),
        help="JSON density matrix; overrides the family options",
    ),
)


def with_state_options(func):
    """Attach the state selection options."""
    for decorator in reversed(state_options):
        func = decorator(func)
    return func


def out_option(func):
    """Attach the --out option."""
    return option(
        "--out", type=PathType(dir_okay=False, writable=True, path_type=Path), help="Output file (default: stdout)"
    )(func)


def _print_version(ctx, param, value):
    # Project
    from steerkit import __version__

    if not value or ctx.resilient_parsing:
        return
    label("steerkit version: {v}", v=__version__)
    ctx.exit()


@group(
    help=CLI_HELP,
    context_settings={"help_option_names": ["-h", "--help"], "color": supports_color},
)
@option(
    "-v",
    "--version",
    is_flag=True,
    callback=_print_version,
    expose_value=False,
    is_eager=True,
    help=cmd_help(E.NUMBERS, "steerkit version", supports_color),
)
@option("--debug", is_flag=True, default=False, help=cmd_help(E.BUG, "Enable debug logging", supports_color))
@help_option(
    "-h",
    "--help",
    help=cmd_help(E.FOLDED_HANDS, "Show this help message", supports_color),
)
@pass_context
@handle_errors
def steerkit(ctx, debug):
    """Initialize Click Command Group."""
    ctx.obj = get_params()
    if debug or ctx.obj.debug:
        set_log_level(logger=log, debug=True)


@steerkit.command("paradox", help=cmd_help(E.SCALES, "Evaluate the steering paradox", supports_color))
@option("--alpha", type=ANGLE, required=True, help="Schmidt angle α")
@option("--phi", type=ANGLE, default=0.0, show_default=True, help="Phase φ")
@option("--settings", type=DIRECTIONS, default="z,x", show_default=True, help="Alice's directions")
@out_option
@handle_errors
def paradox(alpha, phi, settings, out):
    """Quantum total of the paradox sum against the LHS prediction 1."""
    report = paradox_value(schmidt_state(alpha, phi), settings)
    document = {
        **report.export_dict(),
        "metadata": metadata("paradox", {"alpha": alpha, "phi": phi, "settings": [str(s) for s in settings]}),
    }
    emit(dump_json(document), out)


@steerkit.command("bound", help=cmd_help(E.RULER, "Exact LHS bound of a GLSI", supports_color))
@option("--theta", type=ANGLE, required=True, help="Reference angle θ")
@option("--phi", type=ANGLE, default=0.0, show_default=True, help="Reference phase φ")
@option("--directions", type=DIRECTIONS, default="x,y,z", show_default=True, help="Alice's directions")
@out_option
@handle_errors
def bound(theta, phi, directions, out):
    """Enumerate deterministic strategies for C_LHS."""
    instance = build_instance(theta, phi, directions)
    result = classical_bound(instance)
    document = {
        "theta": theta,
        "phi": phi,
        "k": instance.k,
        "c_lhs": result.c_lhs,
        "c_lhs_prime": lsi_from_glsi_bound(instance.k, result.c_lhs),
        "maximizing_strategies": [list(s.assignment) for s in result.maximizing],
        "bloch_vectors": [[list(plus), list(minus)] for plus, minus in instance.bloch_vectors],
    }
    if [d.n_hat for d in directions] == [d.n_hat for d in XYZ]:
        c_plus, c_minus = c_pm(theta)
        document["c_plus"], document["c_minus"] = c_plus, c_minus
    document["metadata"] = metadata(
        "bound", {"theta": theta, "phi": phi, "directions": [str(d) for d in directions]}
    )
    emit(dump_json(document), out)


def _state_parameters(family, alpha, phi, visibility, state_file):
    if state_file is not None:
        return {"state_file": str(state_file)}
    return {"family": family, "alpha": alpha, "phi": phi, "visibility": visibility}


@steerkit.command("eval", help=cmd_help(E.TARGET, "Evaluate the 3-setting GLSI", supports_color))
@with_state_options
@option("--theta", type=ANGLE, required=True, help="Reference angle θ")
@option("--ref-phi", type=ANGLE, default=0.0, show_default=True, help="Reference phase φ")
@option("--signs", type=SIGNS, default="1,1,1", show_default=True, help="Alice's orientations (x, y, z)")
@option("--format", "fmt", type=Choice(("json",)), default="json", show_default=True)
@out_option
@handle_errors
def evaluate(family, alpha, phi, visibility, state_file, theta, ref_phi, signs, fmt, out):
    """S₃, S′₃, the bound and the six correlators for one state."""
    rho = resolve_state(family, alpha, phi, visibility, state_file)
    report = sprime3_value(rho, theta, ref_phi, signs)
    parameters = {
        **_state_parameters(family, alpha, phi, visibility, state_file),
        "theta": theta,
        "ref_phi": ref_phi,
        "signs": list(signs),
    }
    document = {
        **report.export_dict(),
        "usual_lsi_value": usual_lsi_value(rho),
        "state": ComplexMatrix.from_array(rho).dict(),
        "metadata": metadata("eval", parameters),
    }
    emit(dump_json(document), out)


@steerkit.command("optimize", help=cmd_help(E.MAGNIFIER, "Search for a GLSI violation", supports_color))
@with_state_options
@option("--phi-steps", type=int, default=None, help="Scan a uniform φ grid of this size (default: φ = 0)")
@option("--sign-flips/--no-sign-flips", default=None, help="Maximize over Alice's orientations")
@out_option
@pass_context
@handle_errors
def optimize(ctx, family, alpha, phi, visibility, state_file, phi_steps, sign_flips, out):
    """Maximize S′₃ − C′_LHS over θ (and φ, signs)."""
    search = ctx.obj.search
    sign_flips = search.sign_flips if sign_flips is None else sign_flips
    rho = resolve_state(family, alpha, phi, visibility, state_file)
    result = detect_violation(
        rho,
        phis=None if phi_steps is None else phi_grid(phi_steps),
        sign_flips=sign_flips,
        theta_steps=search.theta_steps,
        theta_margin=search.theta_margin,
        theta_tol=search.theta_tol,
    )
    parameters = {
        **_state_parameters(family, alpha, phi, visibility, state_file),
        "phi_steps": phi_steps,
        "sign_flips": sign_flips,
        "theta_steps": search.theta_steps,
        "theta_tol": search.theta_tol,
    }
    document = {
        **result.export_dict(),
        "detected": result.detected,
        "usual_lsi_value": usual_lsi_value(rho),
        "usual_lsi_bound": USUAL_LSI_BOUND,
        "metadata": metadata("optimize", parameters),
    }
    emit(dump_json(document), out)
    if result.detected:
        info("GLSI violated by {v} at θ = {t}", v=f"{result.violation:.6g}", t=f"{result.theta_star:.6f}")
    else:
        warning("No GLSI violation found, best margin {v}", v=f"{result.violation:.6g}")


def _search_kwargs(ctx) -> dict:
    search = ctx.obj.search
    return {
        "sign_flips": search.sign_flips,
        "theta_steps": search.theta_steps,
        "theta_margin": search.theta_margin,
        "theta_tol": search.theta_tol,
    }


@steerkit.command("scan", help=cmd_help(E.MAP, "Scan an (α, V) detection region", supports_color))
@option("--family", type=Choice(SCAN_FAMILIES), required=True, help="Mixed-state family")
@option("--alpha-steps", type=int, default=None, help="α grid size [default: from config, 50]")
@option("--v-steps", type=int, default=None, help="V grid size [default: from config, 50]")
@option("--threads", type=int, default=None, help="Worker threads; 0 uses available parallelism")
@option(
    "--thresholds",
    is_flag=True,
    default=False,
    help="JSON: append threshold curves; CSV/SVG: emit the threshold curves instead of the region",
)
@option("--format", "fmt", type=Choice(("json", "csv", "svg")), default="json", show_default=True)
@out_option
@pass_context
@handle_errors
def scan(ctx, family, alpha_steps, v_steps, threads, thresholds, fmt, out):
    """Usual-LSI and GLSI detection flags on every grid cell."""
    settings = ctx.obj.scan
    alpha_steps = settings.alpha_steps if alpha_steps is None else alpha_steps
    v_steps = settings.v_steps if v_steps is None else v_steps
    threads = settings.threads if threads is None else threads
    if threads < 0:
        raise InputInvalid("--threads must be nonnegative")

    search = _search_kwargs(ctx)
    meta = metadata(
        "scan",
        {
            "family": family,
            "alpha_steps": alpha_steps,
            "v_steps": v_steps,
            "threads": threads,
            "thresholds": thresholds,
            **search,
        },
    )

    if thresholds and fmt != "json":
        alpha_grid, _ = scan_grids(alpha_steps, v_steps)
        curves = threshold_curves(family, alpha_grid, settings.bisection_tol, **search)
        if fmt == "csv":
            emit(csv_with_metadata(rows_csv(curves, THRESHOLD_CSV_FIELDS), meta), out)
        else:
            emit(thresholds_svg(curves, meta), out)
        return

    table = region_scan(family, alpha_steps, v_steps, threads, **search)
    if fmt == "csv":
        emit(csv_with_metadata(region_csv(table, REGION_CSV_FIELDS), meta), out)
    elif fmt == "svg":
        emit(region_svg(table, meta), out)
    else:
        document = {**table.export_dict(), "metadata": meta}
        if thresholds:
            curves = threshold_curves(family, table.alpha_grid, settings.bisection_tol, **search)
            document["thresholds"] = [row.export_dict() for row in curves]
        emit(dump_json(document), out)


@steerkit.command("curves", help=cmd_help(E.CHART, "Pure-state LSI and GLSI curves", supports_color))
@option("--alpha-steps", type=int, default=None, help="α grid size [default: from config, 50]")
@option("--format", "fmt", type=Choice(("json", "csv", "svg")), default="json", show_default=True)
@out_option
@pass_context
@handle_errors
def curves(ctx, alpha_steps, fmt, out):
    """Usual LSI value 1 + 2 sin 2α and optimized GLSI violation per α."""
    alpha_steps = ctx.obj.scan.alpha_steps if alpha_steps is None else alpha_steps
    if alpha_steps < 2:
        raise InputInvalid("--alpha-steps must be at least 2")
    step = (math.pi / 4 - SCAN_ALPHA_START) / (alpha_steps - 1)
    alphas = [SCAN_ALPHA_START + i * step for i in range(alpha_steps)]
    search = _search_kwargs(ctx)
    rows = pure_state_curves(alphas, **search)
    meta = metadata("curves", {"alpha_steps": alpha_steps, **search})

    if fmt == "csv":
        emit(csv_with_metadata(rows_csv(rows, CURVES_CSV_FIELDS), meta), out)
    elif fmt == "svg":
        emit(curves_svg(rows, meta), out)
    else:
        emit(dump_json({"curves": [row.export_dict() for row in rows], "metadata": meta}), out)


@steerkit.command("simulate", help=cmd_help(E.DICE, "Finite-shot simulation", supports_color))
@option("--target", type=Choice(("paradox", "sprime3")), default="paradox", show_default=True)
@with_state_options
@option("--theta", type=ANGLE, default=None, help="Reference angle θ (sprime3)")
@option("--ref-phi", type=ANGLE, default=0.0, show_default=True, help="Reference phase φ (sprime3)")
@option("--signs", type=SIGNS, default="1,1,1", show_default=True, help="Alice's orientations (sprime3)")
@option("--settings", type=DIRECTIONS, default="z,x", show_default=True, help="Alice's directions (paradox)")
@option("--shots", type=int, default=None, help="Shots per setting [default: from config, 10000]")
@option("--seed", type=IntRange(0, MAX_SEED), default=None, help="PRNG seed [default: from config]")
@out_option
@pass_context
@handle_errors
def simulate(ctx, target, family, alpha, phi, visibility, state_file, theta, ref_phi, signs, settings, shots, seed, out):
    """Sample measurement outcomes and estimate the paradox total or S′₃."""
    shots = ctx.obj.shots.shots_per_setting if shots is None else shots
    seed = ctx.obj.shots.seed if seed is None else seed

    if target == "paradox":
        if family != "pure" or state_file is not None:
            raise InputInvalid("The paradox simulation needs a pure Schmidt state (--alpha)")
        report = simulate_paradox(alpha, shots, seed, settings)
        parameters = {"alpha": alpha, "settings": [str(s) for s in settings], "shots": shots}
    else:
        if theta is None:
            raise InputInvalid("--theta is required for the sprime3 target")
        rho = resolve_state(family, alpha, phi, visibility, state_file)
        report = simulate_sprime3(rho, theta, ref_phi, shots, seed, signs)
        parameters = {
            **_state_parameters(family, alpha, phi, visibility, state_file),
            "theta": theta,
            "ref_phi": ref_phi,
            "signs": list(signs),
            "shots": shots,
        }

    parameters["target"] = target
    document = {**report.export_dict(), "metadata": metadata("simulate", parameters, seed=seed)}
    emit(dump_json(document), out)


@steerkit.command("prep", help=cmd_help(E.WRENCH, "Interferometer settings for a state", supports_color))
@option("--alpha", type=ANGLE, default=None, help="Target Schmidt angle α ∈ (0, π/4]")
@option("--beta", type=ANGLE, default=None, help="Interferometer angle β ∈ [0, π/2]")
@out_option
@handle_errors
def prep(alpha, beta, out):
    """β = arcsin(tan α), the heralding probability and the wave-plate angles."""
    if (alpha is None) == (beta is None):
        raise InputInvalid("Give exactly one of --alpha or --beta")
    if beta is None:
        beta = beta_for_alpha(alpha)
    preparation = optics_prep(beta)
    document = {
        **preparation.summary(),
        "metadata": metadata("prep", {"alpha": alpha, "beta": beta}),
    }
    emit(dump_json(document), out)
