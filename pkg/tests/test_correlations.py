import numpy as np
import pytest

from kerrsim.correlations import (
    CovarianceSeries,
    SpectrumResult,
    default_omegas,
    default_taus,
    full_band_omegas,
    quadrature,
    spectral_weight,
    squeezing_spectrum,
    static_covariance,
    two_sided_spectrum,
    two_time_covariance,
)
from kerrsim.errors import (
    ContractViolation,
    ParameterError,
    ShapeError,
    StaleSteadyStateError,
    WindowTooShortError,
)
from kerrsim.fock_algebra import annihilation
from kerrsim.liouvillian import build_liouvillian
from kerrsim.model import SystemParams, TuningPoint, hamiltonian_rot
from kerrsim.solvers import steady_state


@pytest.fixture(scope="module")
def k2_series_long(blockade_k2):
    L, rho = blockade_k2
    taus = np.linspace(0.0, 60.0, 6001)
    return rho, two_time_covariance(L, rho, 0.0, taus=taus)


@pytest.fixture(scope="module")
def k2_series_default(blockade_k2):
    L, rho = blockade_k2
    return rho, two_time_covariance(L, rho, np.pi / 2)


def test_quadrature_operators():
    a = annihilation(5)
    np.testing.assert_allclose(quadrature(5, 0.0), a + a.conj().T, atol=1e-15)
    np.testing.assert_allclose(
        quadrature(5, np.pi / 2), 1j * (a.conj().T - a), atol=1e-15
    )
    x = quadrature(6, 0.73)
    np.testing.assert_allclose(x, x.conj().T, atol=1e-15)


def test_vacuum_quadrature_variance():
    vac = np.zeros((6, 6), dtype=complex)
    vac[0, 0] = 1.0
    x = quadrature(6, 0.3)
    # Symmetric-ordered variance is the vacuum unit; the normally-ordered
    # covariance subtracts it off and vanishes.
    assert np.trace(x @ x @ vac).real == pytest.approx(1.0)
    assert static_covariance(vac, 0.3) == pytest.approx(0.0, abs=1e-14)


def test_undriven_cavity_has_zero_covariance():
    params = SystemParams(chi=2.0, eps=0.0, gamma=1.0, n_th=0.0, dim=6)
    H = hamiltonian_rot(params, TuningPoint(k=1.0))
    L = build_liouvillian(H, 1.0, 0.0)
    vac = np.zeros((6, 6), dtype=complex)
    vac[0, 0] = 1.0
    series = two_time_covariance(L, vac, 0.0, taus=np.linspace(0, 2, 21))
    assert np.abs(series.values).max() <= 1e-12
    spec = squeezing_spectrum(series, np.linspace(-5, 5, 11))
    assert np.abs(spec.values).max() <= 1e-12
    assert spectral_weight(spec) == pytest.approx(0.0, abs=1e-12)


def test_covariance_at_zero_matches_static(k2_series_long, k2_series_default):
    for rho, series in (k2_series_long, k2_series_default):
        static = static_covariance(rho, series.theta)
        assert series.values[0].real == pytest.approx(static, abs=1e-8)
        assert abs(series.values[0].imag) <= 1e-10


def test_covariance_decays_on_two_photon_resonance(k2_series_long, k2_series_default):
    _, series = k2_series_long
    c0 = abs(series.values[0])
    assert abs(series.values[2000]) <= 1e-6 * c0
    _, series_q = k2_series_default
    assert abs(series_q.values[-1]) <= 1e-6 * abs(series_q.values[0])


def test_stale_state_rejected(blockade_k1):
    L, _ = blockade_k1
    mixed = np.eye(15, dtype=complex) / 15
    with pytest.raises(StaleSteadyStateError):
        two_time_covariance(L, mixed, 0.0)


def test_state_shape_mismatch(blockade_k1):
    L, _ = blockade_k1
    with pytest.raises(ShapeError):
        two_time_covariance(L, np.eye(4) / 4, 0.0)


def test_descending_taus_rejected(blockade_k1):
    L, rho = blockade_k1
    with pytest.raises(ParameterError):
        two_time_covariance(L, rho, 0.0, taus=[0.0, 1.0, 0.5])


def test_covariance_series_validation():
    good_taus = np.linspace(0, 1, 11)
    good_vals = np.exp(-good_taus)
    with pytest.raises(ContractViolation):
        CovarianceSeries(theta=0.0, taus=good_taus + 0.1, values=good_vals)
    with pytest.raises(ContractViolation):
        CovarianceSeries(theta=0.0, taus=good_taus[::-1], values=good_vals)
    bad = good_vals.astype(complex)
    bad[3] = np.nan
    with pytest.raises(ContractViolation):
        CovarianceSeries(theta=0.0, taus=good_taus, values=bad)
    imag0 = good_vals.astype(complex)
    imag0[0] = 1.0 + 1e-3j
    with pytest.raises(ContractViolation):
        CovarianceSeries(theta=0.0, taus=good_taus, values=imag0)
    with pytest.raises(ShapeError):
        CovarianceSeries(theta=0.0, taus=good_taus, values=good_vals[:-1])


def test_window_too_short_for_slow_decay():
    taus = np.linspace(0, 20, 201)
    series = CovarianceSeries(theta=0.0, taus=taus, values=np.exp(-0.1 * taus))
    with pytest.raises(WindowTooShortError):
        squeezing_spectrum(series)


def test_default_window_insufficient_at_single_photon_resonance(blockade_k1):
    # The slowest covariance mode at k=1 decays at about gamma/2, so the
    # default 20/gamma window leaves a 1e-5-level tail and must be refused.
    L, rho = blockade_k1
    series = two_time_covariance(L, rho, 0.0)
    assert abs(series.values[-1]) > 1e-6 * abs(series.values[0])
    with pytest.raises(WindowTooShortError):
        squeezing_spectrum(series)


def test_exponential_covariance_gives_lorentzian():
    taus = np.linspace(0, 20, 2001)
    series = CovarianceSeries(theta=0.0, taus=taus, values=np.exp(-taus))
    res = squeezing_spectrum(series)
    exact = 2.0 / (1.0 + res.omegas**2)
    np.testing.assert_allclose(res.values, exact, atol=1e-4)
    assert res.values[np.argmin(np.abs(res.omegas))] == pytest.approx(2.0, abs=1e-4)


def test_two_sided_transform_agrees(k2_series_long):
    _, series = k2_series_long
    omegas = np.linspace(-40, 40, 161)
    one = squeezing_spectrum(series, omegas)
    two = two_sided_spectrum(series, omegas)
    scale = np.abs(one.values).max()
    assert np.abs(two.real - one.values).max() <= 1e-8 * scale
    assert np.abs(two.imag).max() <= max(one.imag_residual, 1e-10 * scale)


def test_theta_periodicity(blockade_k2):
    L, rho = blockade_k2
    taus = np.linspace(0, 5, 101)
    s1 = two_time_covariance(L, rho, 0.4, taus=taus)
    s2 = two_time_covariance(L, rho, 0.4 + np.pi, taus=taus)
    scale = np.abs(s1.values).max()
    np.testing.assert_allclose(s1.values, s2.values, atol=1e-12 * scale)


def test_thermal_spectrum_parseval_on_default_band():
    # Undriven thermal cavity: the spectrum is a gamma/2-width Lorentzian,
    # fully contained in the default +-40 gamma window.
    params = SystemParams(chi=0.5, eps=0.0, gamma=1.0, n_th=0.02, dim=12)
    H = hamiltonian_rot(params, TuningPoint(k=1.0))
    L = build_liouvillian(H, 1.0, 0.02)
    rho = steady_state(L).rho_ss
    series = two_time_covariance(L, rho, 0.0, taus=np.linspace(0, 40, 4001))
    res = squeezing_spectrum(series)
    c0 = series.values[0].real
    assert abs(spectral_weight(res) - c0) <= 0.01 * abs(c0)


def test_full_band_parseval_is_structural(k2_series_long):
    _, series = k2_series_long
    dtau = series.taus[1] - series.taus[0]
    res = squeezing_spectrum(series, full_band_omegas(dtau))
    c0 = series.values[0].real
    assert abs(spectral_weight(res) - c0) <= 1e-10 * abs(c0)


def test_full_band_grid_shape():
    om = full_band_omegas(0.01)
    assert om[-1] == pytest.approx(np.pi / 0.01)
    np.testing.assert_allclose(om, -om[::-1], atol=1e-12)
    assert om.size % 2 == 1
    assert np.diff(om).max() <= 0.05 + 1e-12
    with pytest.raises(ParameterError):
        full_band_omegas(0.0)
    with pytest.raises(ParameterError):
        full_band_omegas(-1.0)


def test_spectrum_result_rejects_large_imaginary_residue():
    with pytest.raises(ContractViolation):
        SpectrumResult(
            theta=0.0, omegas=np.linspace(-1, 1, 3), values=np.ones(3), imag_residual=1.0
        )


def test_default_grids():
    taus = default_taus()
    assert taus.size == 2001
    assert taus[0] == 0.0 and taus[-1] == pytest.approx(20.0)
    om = default_omegas()
    assert om.size == 1601
    assert om[0] == pytest.approx(-40.0) and om[-1] == pytest.approx(40.0)
    assert om[1] - om[0] == pytest.approx(0.05)
