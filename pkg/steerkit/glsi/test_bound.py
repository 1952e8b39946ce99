"""Test the LHS bounds of the GLSI family."""

# Standard Library
import math

# Third Party
import numpy as np
import pytest

# Project
from steerkit.exceptions import InputInvalid, EnumerationTooLarge
from steerkit.models.steering import MeasurementDirection, parse_directions

# Local
from .bound import c_pm, analytic_bound, classical_bound, usual_lsi_bound, lsi_from_glsi_bound
from .instance import build_instance


def test_bound_maximally_entangled_reference():
    bound = classical_bound(build_instance(math.pi / 4))
    assert bound.c_lhs == pytest.approx((3 + math.sqrt(3)) / 2, abs=1e-10)
    assert bound.maximizing
    for strategy in bound.maximizing:
        assert strategy.max_eigenvalue == pytest.approx(bound.c_lhs, abs=1e-9)


def test_bound_eighth_turn():
    bound = classical_bound(build_instance(math.pi / 8))
    assert bound.c_lhs == pytest.approx(2.80656, abs=1e-5)
    assert bound.c_lhs == pytest.approx((3 + math.sqrt(4 + 2 * math.sqrt(2))) / 2, abs=1e-10)


def test_c_pm():
    plus, minus = c_pm(math.pi / 4)
    assert plus == pytest.approx(math.sqrt(3))
    assert minus == pytest.approx(math.sqrt(3))

    plus, minus = c_pm(math.pi / 8)
    assert plus == pytest.approx(math.sqrt(4 + 2 * math.sqrt(2)))
    assert minus == pytest.approx(math.sqrt(4 - 2 * math.sqrt(2)))

    # Mirror symmetry θ → π/2 − θ swaps C₊ and C₋.
    assert c_pm(0.3) == pytest.approx(tuple(reversed(c_pm(math.pi / 2 - 0.3))))


def test_enumeration_matches_closed_form():
    for theta in np.linspace(0.01, math.pi / 2 - 0.01, 50):
        bound = classical_bound(build_instance(float(theta)))
        assert bound.c_lhs == pytest.approx(analytic_bound(float(theta)), abs=1e-9)


def test_bound_independent_of_reference_phase():
    for phi in (0.4, 1.7, 3.0):
        bound = classical_bound(build_instance(0.5, phi))
        assert bound.c_lhs == pytest.approx(analytic_bound(0.5), abs=1e-9)


def test_bound_never_exceeds_settings_count():
    rng = np.random.default_rng(11)
    for _ in range(20):
        theta = rng.uniform(0.05, math.pi / 2 - 0.05)
        directions = [MeasurementDirection(n_hat=tuple(rng.normal(size=3))) for _ in range(3)]
        bound = classical_bound(build_instance(theta, 0.0, directions))
        assert 1.5 <= bound.c_lhs <= 3 + 1e-12


def test_lsi_from_glsi_bound():
    c = classical_bound(build_instance(math.pi / 4)).c_lhs
    assert lsi_from_glsi_bound(3, c) == pytest.approx(math.sqrt(3), abs=1e-10)
    assert lsi_from_glsi_bound(2, 1 + math.sqrt(2) / 2) == pytest.approx(math.sqrt(2))


def test_usual_lsi_bound_agrees_with_glsi_bound():
    for directions in ("x,y,z", "z,x", "x,y,z;1.0,0.5"):
        instance = build_instance(math.pi / 4, 0.0, parse_directions(directions))
        c = classical_bound(instance).c_lhs
        assert usual_lsi_bound(instance) == pytest.approx(lsi_from_glsi_bound(instance.k, c), abs=1e-9)


def test_usual_lsi_bound_needs_antiparallel_vectors():
    with pytest.raises(InputInvalid):
        usual_lsi_bound(build_instance(math.pi / 8))


def test_enumeration_too_large():
    directions = [
        MeasurementDirection.from_angles(math.pi * (j + 1) / 40, 0.7 * j) for j in range(17)
    ]
    instance = build_instance(math.pi / 4, 0.0, directions)
    with pytest.raises(EnumerationTooLarge) as err:
        classical_bound(instance)
    assert err.value.invariant == "enumerable"
    assert err.value.exit_code == 3
