"""Multinomial sampling of projective measurement outcomes."""

# Standard Library
from typing import List, Optional

# Third Party
import numpy as np

# Project
from steerkit.log import log
from steerkit.qcore import IDENTITY, tensor, validate_density
from steerkit.exceptions import InputInvalid
from steerkit.steering import projector
from steerkit.models.shotsim import ShotConfig, ShotSetting, SettingCounts
from steerkit.models.steering import MeasurementDirection


def substream(seed: int, index: int) -> np.random.Generator:
    """Return the Philox generator for setting `index` under `seed`.

    Substreams depend only on (seed, index), never on sampling order.
    """
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(seed, spawn_key=(index,))))


def check_shots(shots: int) -> None:
    if isinstance(shots, bool) or not isinstance(shots, (int, np.integer)) or shots <= 0:
        raise InputInvalid("Shots must be a positive integer, got {shots}", shots=shots)


def _normalized(probabilities: np.ndarray) -> np.ndarray:
    probabilities = np.clip(probabilities.real, 0.0, None)
    return probabilities / probabilities.sum()


def joint_probabilities(
    rho: np.ndarray, a_dir: MeasurementDirection, b_dir: MeasurementDirection
) -> np.ndarray:
    """Return tr[(P̂ₐ ⊗ P̂_b) ρ] indexed [a][b]."""
    return np.array(
        [
            [np.trace(tensor(projector(a_dir, a), projector(b_dir, b)) @ rho).real for b in (0, 1)]
            for a in (0, 1)
        ]
    )


def marginal_probabilities(rho: np.ndarray, b_dir: MeasurementDirection) -> np.ndarray:
    """Return tr[(𝟙 ⊗ P̂_b) ρ]."""
    return np.array([np.trace(tensor(IDENTITY, projector(b_dir, b)) @ rho).real for b in (0, 1)])


def _counts(rho: np.ndarray, setting: ShotSetting, shots: int, generator: np.random.Generator):
    if setting.alice is None:
        probabilities = marginal_probabilities(rho, setting.bob)
        return [generator.multinomial(shots, _normalized(probabilities)).tolist()]
    probabilities = joint_probabilities(rho, setting.alice, setting.bob).reshape(-1)
    return generator.multinomial(shots, _normalized(probabilities)).reshape(2, 2).tolist()


def sample_setting(rho: np.ndarray, setting: ShotSetting, shots: int, seed: int, index: int = 0) -> SettingCounts:
    """Sample one setting from substream (seed, index)."""
    check_shots(shots)
    rho = validate_density(rho)
    return SettingCounts(
        index=index,
        alice=None if setting.alice is None else str(setting.alice),
        bob=str(setting.bob),
        label=setting.label,
        counts=_counts(rho, setting, shots, substream(seed, index)),
    )


def sample_joint(
    rho: np.ndarray,
    a_dir: MeasurementDirection,
    b_dir: MeasurementDirection,
    shots: int,
    seed: int,
    index: int = 0,
) -> SettingCounts:
    """Draw coincidence counts n(a, b) from a multinomial over the four outcomes."""
    return sample_setting(rho, ShotSetting(alice=a_dir, bob=b_dir), shots, seed, index)


def sample_marginal(
    rho: np.ndarray, b_dir: MeasurementDirection, shots: int, seed: int, index: int = 0
) -> SettingCounts:
    """Draw Bob-only counts n(b)."""
    return sample_setting(rho, ShotSetting(alice=None, bob=b_dir), shots, seed, index)


def run_settings(rho: np.ndarray, config: ShotConfig, rho_label: Optional[str] = None) -> List[SettingCounts]:
    """Sample every setting of `config` on its own substream."""
    rho = validate_density(rho)
    counts = [
        sample_setting(rho, setting, config.shots_per_setting, config.seed, index)
        for index, setting in enumerate(config.settings)
    ]
    log.info(
        "Sampled {} settings × {} shots (seed {}){}",
        len(counts),
        config.shots_per_setting,
        config.seed,
        f" for {rho_label}" if rho_label else "",
    )
    return counts
