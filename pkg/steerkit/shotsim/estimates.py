"""Estimates with standard errors from simulated counts."""

# Standard Library
import math
from typing import List, Tuple, Optional, Sequence

# Third Party
import numpy as np

# Project
from steerkit.log import log
from steerkit.glsi import bloch_vector, sprime3_value
from steerkit.qcore import tensor, schmidt_state, validate_density
from steerkit.steering import projector, paradox_value, build_assemblage
from steerkit.constants import GENERATOR_NAME
from steerkit.exceptions import InputInvalid
from steerkit.models.shotsim import ShotConfig, ShotSetting, SettingCounts, EstimateReport
from steerkit.models.steering import MeasurementDirection

# Local
from .sampling import run_settings, check_shots

X, Y, Z = (MeasurementDirection.named(axis) for axis in ("x", "y", "z"))


def _correlator(counts: SettingCounts) -> float:
    """Return Σ (−1)^{a+b} n(a,b)/N, or (n₀ − n₁)/N for Bob-only counts."""
    n = np.array(counts.counts, dtype=float)
    if n.shape == (1, 2):
        return float((n[0, 0] - n[0, 1]) / n.sum())
    return float((n[0, 0] + n[1, 1] - n[0, 1] - n[1, 0]) / n.sum())


def _correlator_error(estimate: float, shots: int) -> float:
    return math.sqrt(max(0.0, 1 - estimate * estimate) / shots)


def _report(
    quantity: str,
    estimate: float,
    std_error: float,
    true_value: float,
    config: ShotConfig,
    counts: List[SettingCounts],
) -> EstimateReport:
    return EstimateReport(
        quantity=quantity,
        estimate=estimate,
        std_error=std_error,
        shots=config.shots_per_setting,
        true_value=true_value,
        seed=config.seed,
        generator=GENERATOR_NAME,
        numpy_version=np.__version__,
        settings=counts,
    )


def estimate_correlator(
    rho: np.ndarray,
    a_dir: MeasurementDirection,
    b_dir: MeasurementDirection,
    shots: int,
    seed: int,
) -> EstimateReport:
    """Estimate ⟨(n̂_a·σ⃗) ⊗ (n̂_b·σ⃗)⟩ with standard error √((1 − E²)/N)."""
    check_shots(shots)
    rho = validate_density(rho)
    config = ShotConfig(
        shots_per_setting=shots, seed=seed, settings=[ShotSetting(alice=a_dir, bob=b_dir)]
    )
    counts = run_settings(rho, config)
    estimate = _correlator(counts[0])

    a_op = sum(s * projector(a_dir, a) for a, s in ((0, 1), (1, -1)))
    b_op = sum(s * projector(b_dir, b) for b, s in ((0, 1), (1, -1)))
    true_value = float(np.trace(tensor(a_op, b_op) @ rho).real)

    return _report(
        f"<{a_dir}|{b_dir}>",
        estimate,
        _correlator_error(estimate, shots),
        true_value,
        config,
        counts,
    )


def simulate_paradox(
    alpha: float,
    shots: int,
    seed: int,
    directions: Optional[Sequence[MeasurementDirection]] = None,
) -> EstimateReport:
    """Estimate the paradox total Σⱼ Σₐ P(Aⱼ = a, Bob finds ρʲₐ).

    Each term is its own setting: Alice measures n̂ⱼ and Bob projects onto
    the Bloch direction of ρʲₐ. The error is √(Σ p(1 − p)/N).
    """
    check_shots(shots)
    if not 0 < alpha < math.pi / 2:
        raise InputInvalid("Schmidt angle α={alpha} outside (0, π/2)", alpha=alpha)
    directions = list(directions or (Z, X))
    if len(directions) < 2:
        raise InputInvalid("The paradox needs at least two settings")

    psi = schmidt_state(alpha)
    true_value = paradox_value(psi, directions).quantum_total
    assemblage = build_assemblage(psi.density, directions)

    settings = [
        ShotSetting(
            alice=state.direction,
            bob=MeasurementDirection(n_hat=bloch_vector(state.normalized)),
            label=f"P({state.direction}={a})",
        )
        for _, a, state in assemblage
    ]
    config = ShotConfig(shots_per_setting=shots, seed=seed, settings=settings)
    counts = run_settings(psi.density, config, rho_label=f"alpha={alpha}")

    # Setting 2j + a records Alice's outcome a alongside Bob's projection onto ρʲₐ.
    probabilities = [c.counts[index % 2][0] / shots for index, c in enumerate(counts)]
    estimate = sum(probabilities)
    std_error = math.sqrt(sum(p * (1 - p) / shots for p in probabilities))

    log.debug("Paradox estimate {} ± {} (true {})", estimate, std_error, true_value)
    return _report("paradox_total", estimate, std_error, true_value, config, counts)


def _sprime3_terms(
    theta: float, phi: float, signs: Tuple[int, int, int]
) -> List[Tuple[Optional[MeasurementDirection], MeasurementDirection, float, str]]:
    sx, sy, sz = signs
    s2t, c2t = math.sin(2 * theta), math.cos(2 * theta)
    cp, sp = math.cos(phi), math.sin(phi)
    terms = [
        (X, X, sx * s2t * cp, "xx"),
        (X, Y, sx * s2t * sp, "xy"),
        (Y, X, sy * s2t * sp, "yx"),
        (Y, Y, -sy * s2t * cp, "yy"),
        (Z, Z, sz, "zz"),
        (None, Z, 2 * c2t, "iz"),
    ]
    return [term for term in terms if abs(term[2]) > 1e-12]


def simulate_sprime3(
    rho: np.ndarray,
    theta: float,
    phi: float = 0.0,
    shots: int = 10000,
    seed: int = 0,
    signs: Tuple[int, int, int] = (1, 1, 1),
) -> EstimateReport:
    """Estimate S′₃ from the correlators it needs.

    At φ = 0 these are ⟨σx⊗σx⟩, ⟨σy⊗σy⟩, ⟨σz⊗σz⟩ and ⟨𝟙⊗σz⟩; otherwise all six.
    """
    check_shots(shots)
    rho = validate_density(rho)
    reference = sprime3_value(rho, theta, phi, signs)

    terms = _sprime3_terms(theta, phi, tuple(reference.signs))
    config = ShotConfig(
        shots_per_setting=shots,
        seed=seed,
        settings=[ShotSetting(alice=a, bob=b, label=label) for a, b, _, label in terms],
    )
    counts = run_settings(rho, config)

    estimate, variance = 0.0, 0.0
    for (_, _, coefficient, _), setting in zip(terms, counts):
        value = _correlator(setting)
        estimate += coefficient * value
        variance += coefficient ** 2 * _correlator_error(value, shots) ** 2

    return _report("s3_prime", estimate, math.sqrt(variance), reference.s3_prime, config, counts)
