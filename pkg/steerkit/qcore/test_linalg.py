"""Test small-dimension linear algebra."""

# Standard Library
import math

# Third Party
import numpy as np
import pytest
from numpy.testing import assert_allclose

# Project
from steerkit.exceptions import InputInvalid, NotHermitian, NotProjector, NotDensityMatrix

# Local
from .linalg import (
    SIGMA_X,
    SIGMA_Y,
    SIGMA_Z,
    IDENTITY,
    tensor,
    eig_herm,
    top_eigenvalue,
    bloch_operator,
    validate_density,
    validate_projector,
    partial_trace_alice,
    partial_transpose_bob,
)
from .states import schmidt_state


def random_density(rng, dim=4):
    """Random full-rank density matrix."""
    g = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    rho = g @ g.conj().T
    return rho / np.trace(rho).real


def test_tensor():
    assert_allclose(tensor(IDENTITY, IDENTITY), np.eye(4))
    assert_allclose(tensor(SIGMA_Z, SIGMA_Z), np.diag([1, -1, -1, 1]))

    alpha = 0.3
    rho = schmidt_state(alpha).density
    xx = np.trace(tensor(SIGMA_X, SIGMA_X) @ rho).real
    assert xx == pytest.approx(math.sin(2 * alpha), abs=1e-12)


def test_tensor_trace_factorizes():
    rng = np.random.default_rng(5)
    for _ in range(200):
        a = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
        b = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
        assert np.trace(tensor(a, b)) == pytest.approx(np.trace(a) * np.trace(b), abs=1e-12)


def test_tensor_rejects_wrong_dimension():
    with pytest.raises(InputInvalid):
        tensor(np.eye(4), IDENTITY)


def test_partial_trace():
    alpha, phi = 0.4, 1.1
    reduced = partial_trace_alice(schmidt_state(alpha, phi).density)
    assert_allclose(reduced, np.diag([math.cos(alpha) ** 2, math.sin(alpha) ** 2]), atol=1e-12)

    rho_b = np.array([[0.7, 0.2 - 0.1j], [0.2 + 0.1j, 0.3]])
    product = tensor(np.diag([1.0, 0.0]), rho_b)
    assert_allclose(partial_trace_alice(product), rho_b, atol=1e-15)

    bell = schmidt_state(math.pi / 4).density
    assert_allclose(partial_trace_alice(bell), IDENTITY / 2, atol=1e-15)


def test_partial_trace_of_schmidt_states():
    rng = np.random.default_rng(6)
    for _ in range(200):
        alpha, phi = rng.uniform(0, math.pi / 2), rng.uniform(0, 2 * math.pi)
        reduced = partial_trace_alice(schmidt_state(alpha, phi).density)
        expected = np.diag([math.cos(alpha) ** 2, math.sin(alpha) ** 2])
        assert_allclose(reduced, expected, atol=1e-12)


def test_partial_trace_preserves_trace():
    rng = np.random.default_rng(7)
    for _ in range(20):
        rho = random_density(rng)
        assert np.trace(partial_trace_alice(rho)).real == pytest.approx(1.0, abs=1e-12)


def test_partial_trace_rejects_non_density():
    with pytest.raises(NotDensityMatrix):
        partial_trace_alice(np.eye(4))


def test_partial_transpose():
    rng = np.random.default_rng(8)
    rho = random_density(rng)
    transposed = partial_transpose_bob(rho)
    assert_allclose(transposed, transposed.conj().T, atol=1e-15)
    assert np.trace(transposed).real == pytest.approx(1.0)
    assert_allclose(partial_transpose_bob(transposed), rho)


def test_eig_herm_pauli():
    assert_allclose(eig_herm(SIGMA_Z), [1, -1])
    assert_allclose(eig_herm(SIGMA_Y), [1, -1])


def test_eig_herm_three_projector_sum():
    # x̂, ŷ and ẑ projectors of the θ = π/4 reference.
    m = [(1, 0, 0), (0, -1, 0), (0, 0, 1)]
    total = sum((IDENTITY + bloch_operator(v)) / 2 for v in m)
    root3 = math.sqrt(3)
    assert_allclose(eig_herm(total), [(3 + root3) / 2, (3 - root3) / 2], atol=1e-12)


def test_eig_herm_trace_identity():
    rng = np.random.default_rng(11)
    for dim in (2, 4):
        for _ in range(25):
            g = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
            h = g + g.conj().T
            values = eig_herm(h)
            assert values.sum() == pytest.approx(np.trace(h).real, abs=1e-10)
            assert np.all(np.diff(values) <= 0)


def test_eig_herm_2x2_matches_characteristic_roots():
    rng = np.random.default_rng(13)
    for _ in range(1000):
        g = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
        h = g + g.conj().T
        trace = np.trace(h).real
        det = np.linalg.det(h).real
        # λ² − tr(h) λ + det(h) = 0
        roots = np.sort(np.roots([1.0, -trace, det]).real)[::-1]
        assert_allclose(eig_herm(h), roots, atol=1e-9)


def test_eig_herm_vectors():
    rng = np.random.default_rng(12)
    for dim in (2, 4):
        g = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
        h = g + g.conj().T
        values, basis = eig_herm(h, vectors=True)
        assert_allclose(h @ basis, basis * values, atol=1e-10)


def test_eig_herm_rejects_non_hermitian():
    with pytest.raises(NotHermitian) as err:
        eig_herm(np.array([[0, 1], [0, 0]], dtype=complex))
    assert err.value.invariant == "hermitian"
    assert err.value.magnitude == pytest.approx(1.0)


def test_top_eigenvalue():
    assert top_eigenvalue(np.diag([0.25, 0.75])) == pytest.approx(0.75)


def test_validate_density():
    with pytest.raises(NotDensityMatrix):
        validate_density(np.diag([1.2, -0.2, 0, 0]))
    with pytest.raises(NotDensityMatrix):
        validate_density(np.eye(4) / 2)
    rho = validate_density(np.eye(4) / 4)
    assert rho.shape == (4, 4)


def test_validate_projector():
    assert_allclose(validate_projector(np.diag([1.0, 0.0])), np.diag([1, 0]))
    with pytest.raises(NotProjector):
        validate_projector(IDENTITY / 2)
    with pytest.raises(NotProjector):
        validate_projector(IDENTITY)
