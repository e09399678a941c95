"""Two-time quadrature covariance and the spectrum of squeezing.

The quadrature X_theta = a e^{-i theta} + a^dag e^{i theta} has the
stationary, normally-ordered, time-ordered covariance

    Cov_theta(tau) = <a^dag(tau) a(0)> - <a^dag><a>
                   + <a^dag(0) a(tau)> - <a^dag><a>
                   + e^{-2i theta} (<a(tau) a(0)> - <a><a>)
                   + e^{+2i theta} (<a^dag(0) a^dag(tau)> - <a^dag><a^dag>),

with the two-time moments obtained from the quantum regression theorem:
propagate the modified operators a rho_ss and rho_ss a^dag under e^{L tau}
and trace against a or a^dag.  Stationarity gives Cov(-tau) = Cov(tau)*, so
the spectrum of squeezing is computed in the one-sided form

    S_theta(omega) = 2 Re Integral_0^inf e^{-i omega tau} Cov_theta(tau) dtau

by trapezoid quadrature on the sampled window.  Negative S_theta indicates
squeezing of that quadrature at that frequency.
"""

from dataclasses import dataclass

import numpy as np

from kerrsim.errors import (
    ContractViolation,
    ParameterError,
    ShapeError,
    StaleSteadyStateError,
    WindowTooShortError,
)
from kerrsim.fock_algebra import annihilation
from kerrsim.liouvillian import SuperOp, _as_state, vectorize
from kerrsim.solvers import step_operator

_OMEGA_CHUNK = 2000


def default_taus() -> np.ndarray:
    """tau from 0 to 20/gamma, step 0.01/gamma (gamma = 1 units)."""
    return np.linspace(0.0, 20.0, 2001)


def default_omegas() -> np.ndarray:
    """omega on [-40, 40] gamma, spacing 0.05 gamma."""
    return np.linspace(-40.0, 40.0, 1601)


def full_band_omegas(dtau: float, spacing: float = 0.05) -> np.ndarray:
    """Symmetric omega grid covering the whole band resolvable at step dtau.

    Spectral weight of a sampled covariance lives on [-pi/dtau, pi/dtau];
    integrating the trapezoid-transform spectrum over this full band returns
    Cov(0) identically, while a narrower window misses whatever weight sits
    beyond its edges (for strongly detuned systems the Kerr sidebands carry
    weight far outside any fixed +-40 gamma window).
    """
    if dtau <= 0:
        raise ParameterError("dtau must be positive")
    edge = np.pi / dtau
    half = max(1, int(np.ceil(edge / spacing)))
    return np.linspace(-edge, edge, 2 * half + 1)


@dataclass(frozen=True)
class CovarianceSeries:
    theta: float
    taus: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        taus = np.asarray(self.taus, dtype=float)
        values = np.asarray(self.values, dtype=complex)
        if taus.ndim != 1 or taus.size != values.size:
            raise ShapeError("taus and values must be 1-D arrays of equal length")
        if taus.size == 0 or taus[0] != 0.0:
            raise ContractViolation("covariance series must start at tau = 0")
        if np.any(np.diff(taus) <= 0):
            raise ContractViolation("taus must be strictly ascending")
        if not np.all(np.isfinite(values)):
            raise ContractViolation("covariance values must be finite")
        if abs(values[0].imag) > 1e-8:
            raise ContractViolation(
                f"Cov(0) must be real, got imaginary part {values[0].imag:.3e}"
            )
        object.__setattr__(self, "taus", taus)
        object.__setattr__(self, "values", values)


@dataclass(frozen=True)
class SpectrumResult:
    theta: float
    omegas: np.ndarray
    values: np.ndarray
    imag_residual: float

    def __post_init__(self):
        if self.imag_residual > 1e-6 * max(np.abs(self.values).max(), 0.0):
            raise ContractViolation(
                f"discarded imaginary part {self.imag_residual:.3e} too large"
            )


def quadrature(dim: int, theta: float) -> np.ndarray:
    """X_theta = a e^{-i theta} + a^dag e^{i theta}."""
    a = annihilation(dim)
    return a * np.exp(-1j * theta) + a.conj().T * np.exp(1j * theta)


def static_covariance(rho_ss, theta: float) -> float:
    """Equal-time normally-ordered variance <:X_theta^2:> - <X_theta>^2."""
    r = _as_state(rho_ss)
    a = annihilation(r.shape[0])
    ad = a.conj().T
    ea = np.trace(a @ r)
    ead = np.trace(ad @ r)
    eada = np.trace(ad @ a @ r)
    eaa = np.trace(a @ a @ r)
    eadad = np.trace(ad @ ad @ r)
    cov = (
        2.0 * (eada - ead * ea)
        + np.exp(-2j * theta) * (eaa - ea * ea)
        + np.exp(2j * theta) * (eadad - ead * ead)
    )
    return float(cov.real)


def two_time_covariance(L: SuperOp, rho_ss, theta: float, taus=None) -> CovarianceSeries:
    """Cov_theta(tau) on the requested tau grid via the regression theorem."""
    r = _as_state(rho_ss)
    if r.shape != (L.dim, L.dim):
        raise ShapeError(f"state shape {r.shape} does not match dim {L.dim}")
    taus = default_taus() if taus is None else np.asarray(taus, dtype=float)

    residual = float(np.linalg.norm(L.matrix @ vectorize(r)))
    if residual > 1e-6:
        raise StaleSteadyStateError(
            f"state is not the steady state of L (residual {residual:.3e})"
        )

    a = annihilation(L.dim)
    ad = a.conj().T
    ea = np.trace(a @ r)
    ead = np.trace(ad @ r)
    # Trace functionals under column stacking: tr[Op unvec(v)] = vec(Op^T).v
    row_a = vectorize(a.T)
    row_ad = vectorize(ad.T)

    v_left = vectorize(a @ r)  # evolves <a^dag(tau) a(0)> and <a(tau) a(0)>
    v_right = vectorize(r @ ad)  # evolves <a^dag(0) a(tau)> and <a^dag(0) a^dag(tau)>

    phase_m = np.exp(-2j * theta)
    phase_p = np.exp(2j * theta)
    values = np.empty(taus.size, dtype=complex)
    cache = {}
    prev_t = 0.0
    for idx, tau in enumerate(taus):
        dt = tau - prev_t
        if dt < 0:
            raise ParameterError("taus must be ascending")
        if dt > 0:
            key = round(dt, 12)
            G = cache.get(key)
            if G is None:
                G = step_operator(L, dt)
                cache[key] = G
            v_left = G @ v_left
            v_right = G @ v_right
        prev_t = tau
        values[idx] = (
            (row_ad @ v_left - ead * ea)
            + (row_a @ v_right - ead * ea)
            + phase_m * (row_a @ v_left - ea * ea)
            + phase_p * (row_ad @ v_right - ead * ead)
        )
    return CovarianceSeries(theta=theta, taus=taus, values=values)


def _trapezoid_weights(taus):
    w = np.zeros(taus.size)
    d = np.diff(taus)
    w[:-1] += 0.5 * d
    w[1:] += 0.5 * d
    return w


def squeezing_spectrum(series: CovarianceSeries, omegas=None) -> SpectrumResult:
    """S_theta(omega) from a decayed covariance window.

    Requires |Cov(tau_end)| <= 1e-6 |Cov(0)|; a window cut before the
    correlations have decayed would alias truncation ripple into the
    spectrum, so it is rejected rather than silently transformed.
    """
    omegas = default_omegas() if omegas is None else np.asarray(omegas, dtype=float)
    c = series.values
    if abs(c[-1]) > 1e-6 * abs(c[0]):
        raise WindowTooShortError(
            f"|Cov| only decayed to {abs(c[-1]):.3e} of {abs(c[0]):.3e} "
            f"at tau = {series.taus[-1]:g}; extend the tau window"
        )
    weighted = _trapezoid_weights(series.taus) * c
    values = np.empty(omegas.size)
    for start in range(0, omegas.size, _OMEGA_CHUNK):
        block = omegas[start : start + _OMEGA_CHUNK]
        kernel = np.exp(-1j * np.outer(block, series.taus))
        values[start : start + _OMEGA_CHUNK] = 2.0 * (kernel @ weighted).real
    # The mirrored two-sided transform differs from the 2 Re form only in an
    # omega-independent imaginary term dtau * Im Cov(0); record it as the
    # discarded imaginary content.
    dtau0 = series.taus[1] - series.taus[0] if series.taus.size > 1 else 0.0
    imag_residual = float(abs(dtau0 * c[0].imag))
    return SpectrumResult(
        theta=series.theta, omegas=omegas, values=values, imag_residual=imag_residual
    )


def two_sided_spectrum(series: CovarianceSeries, omegas=None) -> np.ndarray:
    """Complex two-sided transform using Cov(-tau) = Cov(tau)* (test oracle).

    Returns the full complex integral over tau in [-tau_end, tau_end]; its
    real part must match squeezing_spectrum and its imaginary part is the
    omega-independent residue reported there.
    """
    omegas = default_omegas() if omegas is None else np.asarray(omegas, dtype=float)
    taus_full = np.concatenate([-series.taus[:0:-1], series.taus])
    c_full = np.concatenate([series.values[:0:-1].conj(), series.values])
    weighted = _trapezoid_weights(taus_full) * c_full
    out = np.empty(omegas.size, dtype=complex)
    for start in range(0, omegas.size, _OMEGA_CHUNK):
        block = omegas[start : start + _OMEGA_CHUNK]
        kernel = np.exp(-1j * np.outer(block, taus_full))
        out[start : start + _OMEGA_CHUNK] = kernel @ weighted
    return out


def spectral_weight(result: SpectrumResult) -> float:
    """(1/2 pi) Integral of S over the sampled omega grid."""
    return float(np.trapezoid(result.values, result.omegas) / (2.0 * np.pi))
