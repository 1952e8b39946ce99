"""Quantum values of the GLSI and its 3-setting correlator form."""

# Standard Library
import math
from typing import Tuple, Optional, Sequence

# Third Party
import numpy as np

# Project
from steerkit.log import log
from steerkit.qcore import IDENTITY, SIGMA_X, SIGMA_Y, SIGMA_Z, tensor, bloch_operator, validate_density
from steerkit.exceptions import InputInvalid
from steerkit.steering import signed, projector
from steerkit.models.glsi import Correlators, GlsiInstance, InequalityReport

# Local
from .bound import classical_bound
from .instance import build_instance

Signs = Tuple[int, int, int]

_CORRELATOR_OPERATORS = {
    "xx": tensor(SIGMA_X, SIGMA_X),
    "yy": tensor(SIGMA_Y, SIGMA_Y),
    "xy": tensor(SIGMA_X, SIGMA_Y),
    "yx": tensor(SIGMA_Y, SIGMA_X),
    "zz": tensor(SIGMA_Z, SIGMA_Z),
    "iz": tensor(IDENTITY, SIGMA_Z),
}


def _expectation(rho: np.ndarray, operator: np.ndarray) -> float:
    return float(np.trace(operator @ rho).real)


def _signs(signs: Optional[Sequence[int]], k: int) -> Tuple[int, ...]:
    if signs is None:
        return (1,) * k
    signs = tuple(int(s) for s in signs)
    if len(signs) != k or any(s not in (1, -1) for s in signs):
        raise InputInvalid("Expected {k} signs of +1 or -1, got {signs}", k=k, signs=signs)
    return signs


def correlators(rho: np.ndarray) -> Correlators:
    """Return ⟨σx⊗σx⟩, ⟨σy⊗σy⟩, ⟨σx⊗σy⟩, ⟨σy⊗σx⟩, ⟨σz⊗σz⟩ and ⟨𝟙⊗σz⟩."""
    rho = validate_density(rho)
    if rho.shape != (4, 4):
        raise InputInvalid("Correlators need a two-qubit state")
    return Correlators(**{name: _expectation(rho, op) for name, op in _CORRELATOR_OPERATORS.items()})


def glsi_value(
    rho: np.ndarray, instance: GlsiInstance, signs: Optional[Sequence[int]] = None
) -> float:
    """Return S_k = Σⱼ Σₐ tr[(P̂ₐ^{sⱼn̂ⱼ} ⊗ Πʲₐ) ρ].

    A sign sⱼ = −1 reverses Alice's j-th observable, which swaps her outcome
    labels while Bob's projectors stay fixed.
    """
    rho = validate_density(rho)
    signs = _signs(signs, instance.k)

    total = 0.0
    for n, s, pair in zip(instance.directions, signs, instance.bob_projectors):
        alice = signed(n, s)
        for a, bob in enumerate(pair):
            total += _expectation(rho, tensor(projector(alice, a), bob))
    return total


def glsi_value_bloch(
    rho: np.ndarray, instance: GlsiInstance, signs: Optional[Sequence[int]] = None
) -> float:
    """Return S_k from Pauli expectation values only.

    Σⱼ [½ + ¼⟨(𝟙 + Aⱼ)⊗(m̂ʲ₊·σ⃗)⟩ + ¼⟨(𝟙 − Aⱼ)⊗(m̂ʲ₋·σ⃗)⟩] with Aⱼ = sⱼ n̂ⱼ·σ⃗.
    """
    rho = validate_density(rho)
    signs = _signs(signs, instance.k)

    total = 0.0
    for n, s, (plus, minus) in zip(instance.directions, signs, instance.bloch_vectors):
        alice = s * bloch_operator(n.n_hat)
        total += 0.5
        total += _expectation(rho, tensor(IDENTITY + alice, bloch_operator(plus))) / 4
        total += _expectation(rho, tensor(IDENTITY - alice, bloch_operator(minus))) / 4
    return total


def sprime3_from_correlators(
    corr: Correlators, theta: float, phi: float = 0.0, signs: Signs = (1, 1, 1)
) -> float:
    """Assemble S′₃ = 2·S₃ − 3 from the six correlators."""
    sx, sy, sz = signs
    s2t, c2t = math.sin(2 * theta), math.cos(2 * theta)
    cp, sp = math.cos(phi), math.sin(phi)
    return (
        sx * s2t * (cp * corr.xx + sp * corr.xy)
        + sy * s2t * (sp * corr.yx - cp * corr.yy)
        + sz * corr.zz
        + 2 * c2t * corr.iz
    )


def sprime3_value(
    rho: np.ndarray, theta: float, phi: float = 0.0, signs: Signs = (1, 1, 1)
) -> InequalityReport:
    """Evaluate the 3-setting GLSI at (θ, φ) with Alice's orientations `signs`."""
    rho = validate_density(rho)
    signs = _signs(signs, 3)
    instance = build_instance(theta, phi)
    corr = correlators(rho)
    bound = classical_bound(instance)

    s3 = glsi_value(rho, instance, signs)
    s3_prime = sprime3_from_correlators(corr, theta, phi, signs)
    c_lhs_prime = 2 * bound.c_lhs - 3

    log.debug("S'3={} against C'={} at theta={}, phi={}, signs={}", s3_prime, c_lhs_prime, theta, phi, signs)

    return InequalityReport(
        theta_star=theta,
        phi=phi,
        signs=signs,
        s3=s3,
        s3_prime=s3_prime,
        c_lhs=bound.c_lhs,
        c_lhs_prime=c_lhs_prime,
        violation=s3_prime - c_lhs_prime,
        maximizing_strategies=[s.assignment for s in bound.maximizing],
        correlators=corr,
    )


def usual_lsi_value(rho: np.ndarray, signs: Signs = (1, 1, 1)) -> float:
    """Return ⟨A_x σx⟩ − ⟨A_y σy⟩ + ⟨A_z σz⟩, to be compared with √3."""
    corr = correlators(rho)
    sx, sy, sz = _signs(signs, 3)
    return sx * corr.xx - sy * corr.yy + sz * corr.zz
