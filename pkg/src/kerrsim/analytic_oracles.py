"""Closed-form perturbative solutions used as independent cross-checks.

Two small-parameter regimes appear throughout the package tests:

* Dissipative steady states: expansion parameter delta = gamma/eps with the
  rescaled drive d = eps/(chi*delta) = eps^2/(gamma*chi).  The steady state
  of the damped, driven cavity truncated to the resonant manifold has a
  closed form at first order in delta (4 levels, two-photon resonance) and
  at second order (3 levels, single-photon resonance).

* Dissipation-free dynamics: expansion parameter delta = eps/chi.  The
  driven two-photon Hamiltonian on 4 levels has a closed-form eigensystem
  to second order in delta, giving the truncated Rabi-type evolution from
  vacuum; the single-photon counterpart is an exact two-level rotation.

All returns are plain complex arrays transcribed from the closed forms; no
positivity repair is applied, so at finite delta they are only
approximately physical (that is the point: the numeric solvers must land
within the stated distance of them).
"""

import enum
from dataclasses import dataclass

import numpy as np

from kerrsim.errors import ParameterError


def delta_dissipative(gamma: float, eps: float) -> float:
    """Expansion parameter gamma/eps of the damped steady-state series."""
    if eps <= 0:
        raise ParameterError("eps must be positive")
    return gamma / eps


def delta_unitary(eps: float, chi: float) -> float:
    """Expansion parameter eps/chi of the lossless evolution series."""
    if chi <= 0:
        raise ParameterError("chi must be positive")
    return eps / chi


@dataclass(frozen=True)
class PerturbationParams:
    """delta = gamma/eps and d = eps/(chi delta); both expansions need
    delta << 1 and d*delta << 1 (validity evaluated as both < 0.3)."""

    delta: float
    d: float = 1.0

    def __post_init__(self):
        if not self.delta > 0:
            raise ParameterError(f"delta must be positive, got {self.delta}")
        if not self.d > 0:
            raise ParameterError(f"d must be positive, got {self.d}")

    @property
    def validity(self) -> bool:
        return self.delta < 0.3 and self.d * self.delta < 0.3


class PerturbationOrder(enum.Enum):
    DELTA1 = "delta1"
    DELTA2 = "delta2"


def steady2_approx(p: PerturbationParams) -> np.ndarray:
    """First-order steady state of the damped two-photon resonance (4x4)."""
    d = p.d
    dl = p.delta
    x = -2.0 * d**3 - 2j * d**2 + d
    y = -np.sqrt(2.0) * d**2 * (2.0 * d + 1j)
    z = (1j / 3.0) * np.sqrt(6.0) * d**2
    w = -(2.0 / 3.0) * np.sqrt(3.0) * d**3 * dl
    m = np.array(
        [
            [1.0 + 2.0 * d**2, np.conj(x) * dl, 1j * d * np.sqrt(2.0), np.conj(z) * dl],
            [x * dl, 4.0 * d**2, np.conj(y) * dl, 0.0],
            [-1j * d * np.sqrt(2.0), y * dl, 2.0 * d**2, w],
            [z * dl, 0.0, w, 0.0],
        ],
        dtype=complex,
    )
    return m / (1.0 + 8.0 * d**2)


def steady1_approx(p: PerturbationParams, order=PerturbationOrder.DELTA2) -> np.ndarray:
    """Steady state of the damped single-photon resonance (3x3).

    order selects the truncation of the series: "delta2" keeps terms through
    delta^2, "delta1" drops them (leaving the half/half two-level mixture
    with first-order coherences).
    """
    if isinstance(order, str):
        try:
            order = PerturbationOrder(order)
        except ValueError:
            raise ParameterError(f"unknown perturbation order {order!r}") from None
    d = p.d
    dl = p.delta
    if order is PerturbationOrder.DELTA1:
        m = 0.5 * np.array(
            [
                [1.0, -(d - 0.5j) * dl, 0.0],
                [-(d + 0.5j) * dl, 1.0, -0.5 * d * np.sqrt(2.0) * dl],
                [0.0, -0.5 * d * np.sqrt(2.0) * dl, 0.0],
            ],
            dtype=complex,
        )
        return m
    if order is PerturbationOrder.DELTA2:
        x = -(2.0 * d + 1j) / 4.0
        y = np.sqrt(2.0) * d * (d + 1j) / 8.0
        m = np.array(
            [
                [0.5 + (1.0 - 4.0 * d**2) * dl**2 / 16.0, np.conj(x) * dl, np.conj(y) * dl**2],
                [x * dl, 0.5 - dl**2 / 16.0, -0.25 * np.sqrt(2.0) * d * dl],
                [y * dl**2, -0.25 * np.sqrt(2.0) * d * dl, 0.25 * d**2 * dl**2],
            ],
            dtype=complex,
        )
        return m
    raise ParameterError(f"unknown perturbation order {order!r}")


def trunc2_eigensystem(chi: float, delta: float):
    """Second-order eigensystem of the lossless two-photon Hamiltonian (4 levels).

    Returns (lambdas, vectors) with eigenvalues

        lambda_1 = -chi (3 delta^2 + 1),
        lambda_2 =  chi delta^2 (1 - sqrt(2)),
        lambda_3 =  chi delta^2 (1 + sqrt(2)),
        lambda_4 =  chi (delta^2 + 3),

    and vectors as the columns of the returned matrix, numerically
    normalized from their closed-form components.
    """
    if chi <= 0:
        raise ParameterError("chi must be positive")
    xm = 1.0 - np.sqrt(2.0)
    xp = 1.0 + np.sqrt(2.0)
    lambdas = np.array(
        [
            -chi * (3.0 * delta**2 + 1.0),
            chi * delta**2 * xm,
            chi * delta**2 * xp,
            chi * (delta**2 + 3.0),
        ]
    )
    raw = np.array(
        [
            [
                2.0 * np.sqrt(2.0) * delta,
                -2.0 * np.sqrt(2.0) * (3.0 * delta**2 + 1.0),
                4.0 * delta,
                -np.sqrt(3.0) * delta**2,
            ],
            [delta**2 + 3.0, 3.0 * xm * delta, xm * delta**2 - 3.0, np.sqrt(3.0) * delta],
            [delta**2 + 3.0, 3.0 * xp * delta, -(xp * delta**2 - 3.0), -np.sqrt(3.0) * delta],
            [0.0, delta**2, 2.0 * np.sqrt(2.0) * delta, 2.0 * np.sqrt(6.0)],
        ]
    ).T.astype(complex)
    vectors = raw / np.linalg.norm(raw, axis=0, keepdims=True)
    return lambdas, vectors


def psi2_evolution(chi: float, delta: float, t):
    """Lossless two-photon evolution from vacuum in the 4-level truncation.

    |psi(t)> = sum_j exp(-i lambda_j t) <lambda_j|0> |lambda_j> using the
    approximate eigensystem.  t may be a scalar or an array; the Fock-basis
    components are returned along the last axis.
    """
    lambdas, vectors = trunc2_eigensystem(chi, delta)
    c = vectors[0, :].conj()
    t = np.asarray(t, dtype=float)
    phases = np.exp(-1j * np.multiply.outer(t, lambdas))
    return (phases * c) @ vectors.T


def psi1_evolution(eps: float, t):
    """Lossless single-photon Rabi evolution from vacuum in 3 levels:
    (cos(eps t), -i sin(eps t), 0)."""
    t = np.asarray(t, dtype=float)
    out = np.zeros(t.shape + (3,), dtype=complex)
    out[..., 0] = np.cos(eps * t)
    out[..., 1] = -1j * np.sin(eps * t)
    return out
