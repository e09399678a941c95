"""Steady states of L vec(rho) = 0 and time-domain propagation.

Two independent steady-state algorithms are provided and cross-checked in
the tests: a bordered null-space solve (one redundant row of L replaced by
the trace constraint) and inverse power iteration with a small shift.  Their
agreement is the main numerical trust anchor of the package.

Dissipative propagation uses fixed-step RK4 expressed as a one-step transfer
matrix

    R(h) = I + hL + (hL)^2/2 + (hL)^3/6 + (hL)^4/24,

composed by matrix powers.  This is algebraically the classical RK4 update
for a linear, autonomous right-hand side, and it preserves the trace exactly
because the vectorized-identity row annihilates L and therefore leaves R
with unit column sums in the trace functional.
"""

import enum
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from kerrsim.errors import (
    DegenerateSteadyStateError,
    ParameterError,
    ShapeError,
    SolverConvergenceError,
)
from kerrsim.fock_algebra import hermitian_eig, identity
from kerrsim.liouvillian import DensityMatrix, SuperOp, _as_state, unvectorize, vectorize


class SteadyStateMethod(enum.Enum):
    NULL_SPACE = "null_space"
    INVERSE_POWER = "inverse_power"


@dataclass(frozen=True)
class SteadyStateResult:
    rho_ss: np.ndarray
    residual: float
    method: SteadyStateMethod
    dim_adequate: bool


@dataclass(frozen=True)
class Trajectory:
    """States sampled on an ascending time grid (leading axis is time)."""

    times: np.ndarray
    states: np.ndarray


def _check_unique_null_space(M):
    s = np.linalg.svd(M, compute_uv=False)
    if s[-2] <= 1e-10 * s[0]:
        raise DegenerateSteadyStateError(
            "Liouvillian null space is degenerate (two singular values "
            f"{s[-1]:.3e}, {s[-2]:.3e} vs largest {s[0]:.3e})"
        )


def _finalize(L, v, method):
    rho = unvectorize(v, L.dim)
    rho = 0.5 * (rho + rho.conj().T)
    tr = np.trace(rho).real
    if abs(tr) < 1e-300:
        raise SolverConvergenceError("steady-state candidate has vanishing trace")
    rho = rho / tr
    residual = float(np.linalg.norm(L.matrix @ vectorize(rho)))
    if residual > 1e-8:
        raise SolverConvergenceError(
            f"steady-state residual {residual:.3e} exceeds 1e-8", residual=residual
        )
    probs = np.clip(np.diag(rho).real, 0.0, 1.0)
    dim_adequate = bool(probs[-1] < 1e-10 and probs[-2] < 1e-8)
    return SteadyStateResult(
        rho_ss=rho, residual=residual, method=method, dim_adequate=dim_adequate
    )


def _steady_null_space(L):
    M = L.matrix.copy()
    # Replace the first row (redundant for a trace-preserving generator) by
    # the trace functional vec(I)^T, making the system square and regular.
    M[0, :] = vectorize(identity(L.dim))
    b = np.zeros(L.dim**2, dtype=complex)
    b[0] = 1.0
    v = np.linalg.solve(M, b)
    return _finalize(L, v, SteadyStateMethod.NULL_SPACE)


def _steady_inverse_power(L):
    M = L.matrix
    n2 = M.shape[0]
    sigma = 1e-6 * np.abs(M).sum(axis=0).max()
    lu = scipy.linalg.lu_factor(M - sigma * np.eye(n2))
    v = vectorize(identity(L.dim)) / L.dim
    residual = np.inf
    for _ in range(100):
        v = scipy.linalg.lu_solve(lu, v)
        v = v / np.linalg.norm(v)
        residual = float(np.linalg.norm(M @ v))
        if residual < 1e-10:
            return _finalize(L, v, SteadyStateMethod.INVERSE_POWER)
    raise SolverConvergenceError(
        f"inverse power iteration stalled at residual {residual:.3e}",
        residual=residual,
    )


def steady_state(L: SuperOp, method=SteadyStateMethod.NULL_SPACE) -> SteadyStateResult:
    """Unique steady state of a trace-preserving generator.

    method selects the algorithm ("null_space" or "inverse_power"); the two
    agree to trace distance 1e-8 on valid parameters.  A degenerate null
    space (two singular values of L below 1e-10 relative) is an error: this
    model has a unique steady state whenever gamma > 0, so degeneracy means
    the generator was built wrong.
    """
    if isinstance(method, str):
        try:
            method = SteadyStateMethod(method)
        except ValueError:
            raise ParameterError(f"unknown steady-state method {method!r}") from None
    _check_unique_null_space(L.matrix)
    if method is SteadyStateMethod.NULL_SPACE:
        return _steady_null_space(L)
    if method is SteadyStateMethod.INVERSE_POWER:
        return _steady_inverse_power(L)
    raise ParameterError(f"unknown steady-state method {method!r}")


def trace_distance(rho_a: np.ndarray, rho_b: np.ndarray) -> float:
    """(1/2) tr |rho_a - rho_b|, the standard distinguishability metric."""
    d = np.asarray(rho_a) - np.asarray(rho_b)
    lam, _ = hermitian_eig(d)
    return 0.5 * float(np.abs(lam).sum())


def evolve_unitary(H: np.ndarray, psi0: np.ndarray, times) -> Trajectory:
    """Closed-system evolution |psi(t)> = V exp(-i Lam t) V^dag |psi0>."""
    psi0 = np.asarray(psi0, dtype=complex).ravel()
    if abs(np.linalg.norm(psi0) - 1.0) > 1e-8:
        raise ParameterError("initial state must be normalized")
    times = np.atleast_1d(np.asarray(times, dtype=float))
    if np.any(np.diff(times) < 0):
        raise ParameterError("times must be ascending")
    lam, v = hermitian_eig(H)
    c = v.conj().T @ psi0
    phases = np.exp(-1j * np.outer(times, lam)) * c[None, :]
    states = phases @ v.T
    return Trajectory(times=times, states=states)


def _rk4_transfer(Lm, h):
    n2 = Lm.shape[0]
    A = h * Lm
    eye = np.eye(n2)
    R = eye + A @ (eye + A @ (eye / 2.0 + A @ (eye / 6.0 + A / 24.0)))
    return R


def step_operator(L: SuperOp, dt: float) -> np.ndarray:
    """Dense RK4 transfer matrix covering an interval dt in bounded substeps."""
    if dt < 0:
        raise ParameterError("propagation interval must be nonnegative")
    n2 = L.matrix.shape[0]
    if dt == 0.0:
        return np.eye(n2, dtype=complex)
    h_max = L.step_bound
    if h_max is None:
        h_max = 0.01 / max(np.abs(L.matrix).sum(axis=0).max(), 1.0)
    m = max(1, int(np.ceil(dt / h_max)))
    R = _rk4_transfer(L.matrix, dt / m)
    return np.linalg.matrix_power(R, m)


def evolve_master(L: SuperOp, rho0, times) -> Trajectory:
    """Dissipative evolution of rho0 sampled at the requested times."""
    rho0 = rho0 if isinstance(rho0, DensityMatrix) else DensityMatrix(np.asarray(rho0))
    if rho0.dim != L.dim:
        raise ShapeError(f"state dim {rho0.dim} does not match generator dim {L.dim}")
    times = np.atleast_1d(np.asarray(times, dtype=float))
    if times[0] < 0 or np.any(np.diff(times) < 0):
        raise ParameterError("times must be ascending and nonnegative")

    v = vectorize(rho0.mat)
    states = np.empty((times.size, L.dim, L.dim), dtype=complex)
    cache = {}
    prev_t = 0.0
    for j, t in enumerate(times):
        dt = t - prev_t
        if dt > 0:
            key = round(dt, 12)
            G = cache.get(key)
            if G is None:
                G = step_operator(L, dt)
                cache[key] = G
            v = G @ v
        prev_t = t
        states[j] = unvectorize(v, L.dim)
    if not np.all(np.isfinite(states)):
        raise SolverConvergenceError("master-equation propagation diverged")
    return Trajectory(times=times, states=states)


def propagate(L: SuperOp, op_vec: np.ndarray, tau: float) -> np.ndarray:
    """e^{L tau} applied to a vectorized operator (regression-theorem kernel)."""
    if tau < 0:
        raise ParameterError(f"tau must be nonnegative, got {tau}")
    op_vec = np.asarray(op_vec, dtype=complex).ravel()
    if op_vec.size != L.dim**2:
        raise ShapeError(
            f"operator vector length {op_vec.size} does not match dim {L.dim}"
        )
    if tau == 0:
        return op_vec.copy()
    return step_operator(L, tau) @ op_vec
