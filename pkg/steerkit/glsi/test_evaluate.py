"""Test GLSI instances and their quantum values."""

# Standard Library
import math

# Third Party
import numpy as np
import pytest
from numpy.testing import assert_allclose

# Project
from steerkit.qcore import IDENTITY, MAXIMALLY_MIXED, make_state, bloch_operator, schmidt_state
from steerkit.exceptions import InputInvalid, NotProjector, DegenerateReference, DuplicateDirections
from steerkit.models.quantum import StateFamilySpec
from steerkit.models.steering import MeasurementDirection, parse_directions

# Local
from .search import SIGN_TUPLES, c_prime
from .evaluate import (
    glsi_value,
    correlators,
    sprime3_value,
    usual_lsi_value,
    glsi_value_bloch,
    sprime3_from_correlators,
)
from .instance import bloch_vector, build_instance, bob_projectors

X, Y, Z = (MeasurementDirection.named(axis) for axis in ("x", "y", "z"))


def random_density(rng):
    """Random full-rank two-qubit density matrix."""
    g = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    rho = g @ g.conj().T
    return rho / np.trace(rho).real


def test_bob_projectors_z():
    plus, minus = bob_projectors(0.3, 0.0, Z)
    assert_allclose(plus, np.diag([1, 0]), atol=1e-12)
    assert_allclose(minus, np.diag([0, 1]), atol=1e-12)


def test_bob_projectors_x_and_y():
    theta = 0.4
    s, c = math.sin(2 * theta), math.cos(2 * theta)
    plus, minus = bob_projectors(theta, 0.0, X)
    assert_allclose(bloch_vector(plus), (s, 0, c), atol=1e-12)
    assert_allclose(bloch_vector(minus), (-s, 0, c), atol=1e-12)

    plus, minus = bob_projectors(theta, 0.0, Y)
    assert_allclose(bloch_vector(plus), (0, -s, c), atol=1e-12)
    assert_allclose(bloch_vector(minus), (0, s, c), atol=1e-12)


def test_bob_projectors_reference_phase():
    theta, phi = 0.6, 1.1
    s, c = math.sin(2 * theta), math.cos(2 * theta)
    plus, _ = bob_projectors(theta, phi, Y)
    assert_allclose(bloch_vector(plus), (s * math.sin(phi), -s * math.cos(phi), c), atol=1e-12)


def test_bob_projectors_degenerate_reference():
    with pytest.raises(DegenerateReference):
        bob_projectors(0.0, 0.0, Z)
    for theta in (0.0, math.pi / 2):
        for n in (X, Y, Z):
            with pytest.raises(DegenerateReference) as err:
                bob_projectors(theta, 0.3, n)
            assert err.value.invariant == "reference_normalization"
            assert err.value.exit_code == 3
    with pytest.raises(InputInvalid):
        bob_projectors(2.0, 0.0, Z)


def test_bloch_vector_round_trip():
    rng = np.random.default_rng(3)
    for _ in range(1000):
        m = rng.normal(size=3)
        m /= np.linalg.norm(m)
        p = (IDENTITY + bloch_operator(m)) / 2
        assert_allclose(bloch_vector(p), m, atol=1e-12)


def test_bloch_vector_rejects_non_projector():
    with pytest.raises(NotProjector):
        bloch_vector(IDENTITY / 2)


def test_instance_antiparallel_only_at_quarter_turn():
    assert build_instance(math.pi / 4).antiparallel_defect() == pytest.approx(0.0, abs=1e-12)
    assert build_instance(math.pi / 8).antiparallel_defect() == pytest.approx(math.sqrt(2), abs=1e-12)


def test_instance_projector_probabilities():
    # Σₐ p(a|n̂) Πₐ recovers the reference marginal on Bob.
    theta = 0.35
    instance = build_instance(theta)
    reference = schmidt_state(theta).density
    for n, (plus, minus) in zip(instance.directions, instance.bob_projectors):
        weights = [
            np.trace(np.kron(IDENTITY + (-1) ** a * bloch_operator(n.n_hat), IDENTITY) @ reference).real / 2
            for a in (0, 1)
        ]
        rho_b = weights[0] * plus + weights[1] * minus
        assert_allclose(rho_b, np.diag([math.cos(theta) ** 2, math.sin(theta) ** 2]), atol=1e-12)


def test_instance_rejects_duplicates_and_empty():
    with pytest.raises(InputInvalid):
        build_instance(0.3, 0.0, [])
    with pytest.raises(DuplicateDirections):
        build_instance(0.3, 0.0, parse_directions("x,-x"))


def test_glsi_value_matched_reference():
    for theta in (0.1, 0.5, math.pi / 4, 1.3):
        instance = build_instance(theta)
        assert glsi_value(schmidt_state(theta).density, instance) == pytest.approx(3.0, abs=1e-12)


def test_glsi_value_maximally_mixed():
    assert glsi_value(MAXIMALLY_MIXED, build_instance(0.3)) == pytest.approx(1.5, abs=1e-12)


def test_glsi_value_two_settings():
    instance = build_instance(0.7, 0.0, parse_directions("z,x"))
    assert instance.k == 2
    assert glsi_value(schmidt_state(0.7).density, instance) == pytest.approx(2.0, abs=1e-12)


def test_glsi_value_bloch_form():
    rng = np.random.default_rng(17)
    for _ in range(20):
        rho = random_density(rng)
        instance = build_instance(rng.uniform(0.05, 1.5), rng.uniform(0, 2 * math.pi))
        for signs in ((1, 1, 1), (1, -1, 1), (-1, -1, -1)):
            assert glsi_value_bloch(rho, instance, signs) == pytest.approx(
                glsi_value(rho, instance, signs), abs=1e-12
            )


def test_glsi_value_rejects_bad_signs():
    with pytest.raises(InputInvalid):
        glsi_value(MAXIMALLY_MIXED, build_instance(0.3), (1, 0, 1))
    with pytest.raises(InputInvalid):
        glsi_value(MAXIMALLY_MIXED, build_instance(0.3), (1, 1))


def test_correlator_form_identity():
    rng = np.random.default_rng(29)
    for _ in range(100):
        rho = random_density(rng)
        corr = correlators(rho)
        for _ in range(20):
            theta = rng.uniform(0.02, math.pi / 2 - 0.02)
            phi = rng.uniform(0, 2 * math.pi)
            signs = SIGN_TUPLES[rng.integers(len(SIGN_TUPLES))]
            s3 = glsi_value_bloch(rho, build_instance(theta, phi), signs)
            assert sprime3_from_correlators(corr, theta, phi, signs) == pytest.approx(
                2 * s3 - 3, abs=1e-10
            )


def test_sprime3_matched_pure_state():
    theta = math.pi / 4
    report = sprime3_value(schmidt_state(theta).density, theta)
    assert report.s3 == pytest.approx(3.0, abs=1e-12)
    assert report.s3_prime == pytest.approx(3.0, abs=1e-12)
    assert report.c_lhs_prime == pytest.approx(math.sqrt(3), abs=1e-10)
    assert report.violation == pytest.approx(3 - math.sqrt(3), abs=1e-10)
    assert report.correlators.zz == pytest.approx(1.0)


def test_sprime3_bound_matches_closed_form():
    for theta in (0.2, 0.9, 1.4):
        report = sprime3_value(MAXIMALLY_MIXED, theta)
        assert report.s3_prime == pytest.approx(0.0, abs=1e-12)
        assert report.c_lhs_prime == pytest.approx(float(c_prime(theta)), abs=1e-9)
        assert report.violation < 0


def test_sprime3_weakly_entangled_pure_state():
    alpha = math.pi / 20
    report = sprime3_value(schmidt_state(alpha).density, alpha)
    assert report.violation > 0


def test_usual_lsi_value_werner():
    for alpha in (0.1, 0.4, math.pi / 4):
        for v in (0.3, 0.8, 1.0):
            rho = make_state(StateFamilySpec(family="werner", alpha=alpha, visibility=v))
            assert usual_lsi_value(rho) == pytest.approx(v * (1 + 2 * math.sin(2 * alpha)), abs=1e-12)


def test_usual_lsi_value_signs():
    rho = schmidt_state(math.pi / 4).density
    assert usual_lsi_value(rho) == pytest.approx(3.0)
    assert usual_lsi_value(rho, (-1, -1, -1)) == pytest.approx(-3.0)
    assert usual_lsi_value(rho, (1, 1, -1)) == pytest.approx(1.0)
