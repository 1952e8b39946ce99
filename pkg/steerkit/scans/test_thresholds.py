"""Test visibility thresholds and their crossovers."""

# Standard Library
import math

# Third Party
import numpy as np
import pytest

# Project
from steerkit.constants import ALPHA_BOUNDARY
from steerkit.exceptions import InputInvalid

# Local
from .thresholds import (
    family_search,
    asym_vmax_glsi,
    crossover_alpha,
    asym_vmax_usual,
    threshold_curves,
    werner_vmin_glsi,
    thresholds_merged,
    werner_vmin_usual,
    symmetry_check_asymmetric,
)


def test_usual_thresholds_closed_form():
    for alpha in np.linspace(0.2, math.pi / 4, 7):
        s = math.sin(2 * alpha)
        werner = werner_vmin_usual(float(alpha))
        asym = asym_vmax_usual(float(alpha))
        assert werner.v_threshold == pytest.approx(math.sqrt(3) / (1 + 2 * s), abs=1e-12)
        assert asym.v_threshold == pytest.approx((1 - math.sqrt(3) + 2 * s) / (2 * (1 + s)), abs=1e-12)
        assert werner.method == asym.method == "usual_lsi_analytic"


def test_usual_thresholds_at_boundary():
    assert ALPHA_BOUNDARY == pytest.approx(0.1873, abs=1e-4)
    assert werner_vmin_usual(ALPHA_BOUNDARY).v_threshold == pytest.approx(1.0, abs=1e-12)
    assert asym_vmax_usual(ALPHA_BOUNDARY).v_threshold == pytest.approx(0.0, abs=1e-12)


def test_usual_undetectable_below_boundary():
    assert werner_vmin_usual(0.05).undetectable
    assert asym_vmax_usual(0.05).undetectable


def test_threshold_input_validation():
    with pytest.raises(InputInvalid):
        werner_vmin_usual(0.0)
    with pytest.raises(InputInvalid):
        asym_vmax_glsi(1.0)
    with pytest.raises(InputInvalid):
        werner_vmin_glsi(0.3, tol=1e-9)


def test_glsi_thresholds_at_quarter_turn():
    werner = werner_vmin_glsi(math.pi / 4)
    asym = asym_vmax_glsi(math.pi / 4)
    assert werner.v_threshold == pytest.approx(math.sqrt(3) / 3, abs=1e-5)
    assert asym.v_threshold == pytest.approx((3 - math.sqrt(3)) / 4, abs=1e-5)
    assert werner.theta_star == pytest.approx(math.pi / 4, abs=1e-6)
    assert werner.method == "glsi_numeric"


def test_glsi_thresholds_at_boundary():
    assert werner_vmin_glsi(ALPHA_BOUNDARY).v_threshold == pytest.approx(0.914, abs=0.005)
    assert asym_vmax_glsi(ALPHA_BOUNDARY).v_threshold == pytest.approx(0.0889, abs=0.005)


def test_glsi_detects_below_boundary():
    werner = werner_vmin_glsi(0.05)
    asym = asym_vmax_glsi(0.05)
    assert not werner.undetectable
    assert werner.v_threshold < 1
    assert not asym.undetectable
    assert asym.v_threshold > 0


def test_glsi_never_worse_than_usual():
    for alpha in (0.2, 0.3, 0.5, 0.7):
        werner_usual, werner_glsi = werner_vmin_usual(alpha), werner_vmin_glsi(alpha)
        assert werner_glsi.v_threshold <= werner_usual.v_threshold + 2e-6
        asym_usual, asym_glsi = asym_vmax_usual(alpha), asym_vmax_glsi(alpha)
        assert asym_glsi.v_threshold >= asym_usual.v_threshold - 2e-6


def test_detection_flips_across_threshold():
    alpha = 0.3
    threshold = werner_vmin_glsi(alpha).v_threshold
    assert family_search("werner", alpha, threshold + 1e-3).violation > 0
    assert family_search("werner", alpha, threshold - 1e-3).violation <= 0

    threshold = asym_vmax_glsi(alpha).v_threshold
    assert family_search("asymmetric", alpha, threshold - 1e-3).violation > 0
    assert family_search("asymmetric", alpha, threshold + 1e-3).violation <= 0


def test_asymmetric_mirror_symmetry():
    rng = np.random.default_rng(7)
    for _ in range(20):
        alpha, v = rng.uniform(0.02, math.pi / 4), rng.uniform(0.0, 1.0)
        assert symmetry_check_asymmetric(alpha, v)
    with pytest.raises(InputInvalid):
        symmetry_check_asymmetric(0.3, 1.5)


def test_thresholds_merge_above_crossover():
    assert thresholds_merged("werner", math.pi / 4)
    assert thresholds_merged("asymmetric", math.pi / 4)
    assert not thresholds_merged("werner", 0.25)
    with pytest.raises(InputInvalid):
        thresholds_merged("pure", 0.3)


def test_merge_tolerance_is_separate_from_bisection():
    # The asymmetric gap at α = 0.47 is about 5e-5.
    assert thresholds_merged("asymmetric", 0.47)
    assert not thresholds_merged("asymmetric", 0.47, merge_tol=1e-5)
    assert not thresholds_merged("asymmetric", 0.44)
    with pytest.raises(InputInvalid):
        thresholds_merged("werner", 0.5, tol=1e-4, merge_tol=1e-4)


def test_crossover_alpha():
    assert crossover_alpha("werner") == pytest.approx(0.3508, abs=0.01)
    assert crossover_alpha("asymmetric") == pytest.approx(0.4597, abs=0.01)


def test_threshold_curves():
    rows = threshold_curves("werner", [0.05, math.pi / 4])
    assert [row.alpha for row in rows] == [0.05, math.pi / 4]
    assert rows[0].usual_threshold == "undetectable"
    assert rows[0].glsi_threshold < 1
    assert rows[1].glsi_threshold == pytest.approx(rows[1].usual_threshold, abs=2e-6)


def test_asymmetric_mirror_violation_magnitude():
    assert symmetry_check_asymmetric(math.pi / 6, 0.05)
    assert symmetry_check_asymmetric(0.4, 0.5)
    low = family_search("asymmetric", math.pi / 4, 0.2)
    high = family_search("asymmetric", math.pi / 4, 0.8)
    assert low.violation == pytest.approx(high.violation, abs=1e-8)


def test_werner_violation_monotone_in_visibility():
    for alpha in (0.1, 0.4, 0.7):
        values = [family_search("werner", alpha, v).violation for v in np.linspace(0, 1, 11)]
        assert all(b >= a - 1e-12 for a, b in zip(values, values[1:]))
