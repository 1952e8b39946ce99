"""Test assemblages and the steering paradox."""

# Standard Library
import math

# Third Party
import numpy as np
import pytest
from numpy.testing import assert_allclose

# Project
from steerkit.qcore import IDENTITY, schmidt_state
from steerkit.exceptions import (
    InputInvalid,
    NotEntangled,
    DuplicateDirections,
    CoincidentConditionalStates,
)
from steerkit.models.quantum import PureState
from steerkit.models.steering import MeasurementDirection, parse_directions

# Local
from .paradox import paradox_value
from .assemblage import build_assemblage, conditional_state
from .measurement import signed, projector

Z = MeasurementDirection.named("z")
X = MeasurementDirection.named("x")

NINE_ALPHAS = [i * math.pi / 36 for i in range(1, 10)]


def random_direction(rng):
    """Uniform direction on the sphere."""
    v = rng.normal(size=3)
    return MeasurementDirection(n_hat=tuple(v))


def random_pure(rng):
    """Random two-qubit pure state."""
    amplitudes = rng.normal(size=4) + 1j * rng.normal(size=4)
    return PureState.from_amplitudes(amplitudes)


def random_density(rng):
    """Random full-rank two-qubit density matrix."""
    g = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    rho = g @ g.conj().T
    return rho / np.trace(rho).real


def test_projector():
    assert_allclose(projector(Z, 0), np.diag([1, 0]))
    assert_allclose(projector(Z, 1), np.diag([0, 1]))
    assert_allclose(projector(X, 0), np.full((2, 2), 0.5))
    with pytest.raises(InputInvalid):
        projector(Z, 2)


def test_projectors_resolve_identity():
    rng = np.random.default_rng(20)
    for _ in range(1000):
        n = random_direction(rng)
        zero, one = projector(n, 0), projector(n, 1)
        assert_allclose(zero + one, IDENTITY, atol=1e-12)
        assert_allclose(zero @ zero, zero, atol=1e-12)


def test_signed_direction_swaps_outcomes():
    n = MeasurementDirection.from_angles(0.7, 1.9)
    assert_allclose(projector(signed(n, -1), 0), projector(n, 1), atol=1e-15)
    assert signed(Z, -1).label == "-z"
    assert signed(Z, 1) is Z


def test_conditional_states_z():
    alpha = 0.3
    rho = schmidt_state(alpha).density
    zero = conditional_state(rho, Z, 0)
    assert zero.probability == pytest.approx(math.cos(alpha) ** 2)
    assert_allclose(zero.normalized, np.diag([1, 0]), atol=1e-12)


def test_zero_probability_branch():
    product = np.kron(np.diag([1.0, 0.0]), IDENTITY / 2)
    branch = conditional_state(product, Z, 1)
    assert branch.probability == pytest.approx(0.0)
    assert branch.normalized is None
    assert not branch.defined


def test_no_signaling():
    rng = np.random.default_rng(21)
    for _ in range(30):
        rho = random_density(rng)
        directions = [random_direction(rng) for _ in range(3)]
        assemblage = build_assemblage(rho, directions)
        for pair in assemblage.states:
            assert_allclose(pair[0].unnormalized + pair[1].unnormalized, assemblage.rho_b, atol=1e-12)
            assert pair[0].probability + pair[1].probability == pytest.approx(1.0, abs=1e-12)


def test_pure_state_conditional_purity_and_overlap():
    rng = np.random.default_rng(22)
    for _ in range(30):
        alpha = rng.uniform(0.05, math.pi / 2 - 0.05)
        rho = schmidt_state(alpha).density
        n = random_direction(rng)
        zero = conditional_state(rho, n, 0)
        one = conditional_state(rho, n, 1)
        for state in (zero, one):
            assert np.trace(state.normalized @ state.normalized).real == pytest.approx(1.0, abs=1e-10)
        # |⟨χ₊|χ₋⟩|² = cos²2α · sin²τ / (4 p₀ p₁) for the Schmidt state.
        overlap = np.trace(zero.normalized @ one.normalized).real
        tau = n.tau
        expected = (math.cos(2 * alpha) * math.sin(tau)) ** 2 / (4 * zero.probability * one.probability)
        assert overlap == pytest.approx(expected, abs=1e-10)


def test_duplicate_directions():
    with pytest.raises(DuplicateDirections) as err:
        build_assemblage(np.eye(4) / 4, [Z, MeasurementDirection.named("-z")])
    assert err.value.invariant == "distinct_directions"


def test_paradox_two_settings():
    for alpha in NINE_ALPHAS:
        report = paradox_value(schmidt_state(alpha), [Z, X])
        assert report.quantum_total == pytest.approx(2.0, abs=1e-10)
        assert report.lhs_prediction == 1.0
        assert report.settings_count == 2
        assert len(report.per_term) == 4


def test_paradox_k_settings_random_states():
    rng = np.random.default_rng(23)
    for k in (3, 4):
        for _ in range(10):
            psi = random_pure(rng)
            directions = [random_direction(rng) for _ in range(k)]
            report = paradox_value(psi, directions)
            assert report.quantum_total == pytest.approx(k, abs=1e-10)


def test_paradox_three_axes():
    report = paradox_value(schmidt_state(0.5, 0.3), parse_directions("x,y,z"))
    assert report.quantum_total == pytest.approx(3.0, abs=1e-10)


def test_paradox_rejects_product_state():
    with pytest.raises(NotEntangled) as err:
        paradox_value(schmidt_state(0.0), [Z, X])
    assert err.value.invariant == "entangled"


def test_paradox_rejects_coincident_states():
    # Weakly entangled: the x̂ branches and |0⟩ nearly coincide.
    psi = schmidt_state(1e-5)
    with pytest.raises(CoincidentConditionalStates):
        paradox_value(psi, [Z, X])


def test_paradox_rejects_single_qubit_state():
    with pytest.raises(InputInvalid):
        paradox_value(PureState.from_amplitudes([1, 1]), [Z, X])
