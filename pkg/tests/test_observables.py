import numpy as np
import pytest

from kerrsim.errors import ParameterError
from kerrsim.observables import (
    DEFAULT_OFFDIAG_PAIRS,
    CoherenceReport,
    coherence_param,
    coherence_report,
    fano,
    linear_entropy,
    mean_photon_number,
    offdiag,
    photon_probs,
    photon_stats,
    purity,
    thermalization,
    truncation_fidelity,
    uppermost_level,
    vn_entropy,
)


def _vacuum(dim):
    rho = np.zeros((dim, dim), dtype=complex)
    rho[0, 0] = 1.0
    return rho


def _random_density(rng, dim):
    m = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    rho = m @ m.conj().T
    return rho / np.trace(rho)


def test_photon_probs_basics():
    np.testing.assert_array_equal(photon_probs(_vacuum(4)), [1, 0, 0, 0])
    np.testing.assert_allclose(photon_probs(np.eye(4) / 4), [0.25] * 4)


def test_photon_probs_clamped():
    rho = np.diag([1.0 + 5e-11, -5e-11, 0.0]).astype(complex)
    probs = photon_probs(rho)
    assert probs.min() >= 0.0
    assert probs.max() <= 1.0


def test_truncation_fidelity_monotone(blockade_k1):
    _, rho = blockade_k1
    fids = [truncation_fidelity(rho, m) for m in range(rho.shape[0])]
    assert np.all(np.diff(fids) >= -1e-15)
    assert fids[-1] == pytest.approx(1.0, abs=1e-8)
    assert truncation_fidelity(_vacuum(5), 0) == pytest.approx(1.0)


def test_truncation_fidelity_range_check():
    with pytest.raises(ParameterError):
        truncation_fidelity(_vacuum(4), 4)
    with pytest.raises(ParameterError):
        truncation_fidelity(_vacuum(4), -1)


def test_fano_fock_state_is_zero():
    rho = np.zeros((5, 5), dtype=complex)
    rho[2, 2] = 1.0
    assert fano(rho) == pytest.approx(0.0, abs=1e-12)


def test_fano_thermal_state():
    n_bar = 0.5
    dim = 60
    ratio = n_bar / (1.0 + n_bar)
    p = ratio ** np.arange(dim)
    p /= p.sum()
    assert fano(np.diag(p).astype(complex)) == pytest.approx(1.0 + n_bar, abs=1e-8)


def test_fano_vacuum_undefined():
    assert fano(_vacuum(4)) is None
    stats = photon_stats(_vacuum(4))
    assert stats.fano is None
    assert stats.mean_n == pytest.approx(0.0)


def test_mean_photon_number():
    rho = np.diag([0.5, 0.0, 0.5]).astype(complex)
    assert mean_photon_number(rho) == pytest.approx(1.0)


def test_purity_entropy_pure_and_mixed():
    plus = np.full((2, 2), 0.5, dtype=complex)
    assert purity(plus) == pytest.approx(1.0)
    assert vn_entropy(plus) == pytest.approx(0.0, abs=1e-12)
    assert linear_entropy(plus) == pytest.approx(0.0, abs=1e-12)

    mixed = np.eye(2, dtype=complex) / 2
    assert purity(mixed) == pytest.approx(0.5)
    assert vn_entropy(mixed) == pytest.approx(np.log(2.0))
    assert linear_entropy(mixed) == pytest.approx(0.5)


def test_entropy_bounds_random_states():
    rng = np.random.default_rng(17)
    for _ in range(6):
        rho = _random_density(rng, 6)
        s = vn_entropy(rho)
        sl = linear_entropy(rho)
        assert s - sl >= -1e-10
        assert sl >= -1e-12
        assert 1.0 / 6 - 1e-12 <= purity(rho) <= 1.0 + 1e-12
        assert sl == pytest.approx(1.0 - purity(rho), abs=1e-12)


def test_coherence_param_closed_forms():
    assert coherence_param(np.diag([0.3, 0.7]).astype(complex)) == pytest.approx(0.0)
    plus = np.full((2, 2), 0.5, dtype=complex)
    assert coherence_param(plus) == pytest.approx(0.5)
    assert coherence_param(plus, normalized=True) == pytest.approx(1.0)


def test_coherence_param_two_routes_agree():
    rng = np.random.default_rng(19)
    for _ in range(5):
        rho = _random_density(rng, 7)
        direct = sum(
            abs(rho[n, m]) ** 2 for n in range(7) for m in range(7) if n != m
        )
        mu_route = purity(rho) - purity(np.diag(np.diag(rho)))
        c = coherence_param(rho)
        assert c == pytest.approx(direct, abs=1e-12)
        assert c == pytest.approx(mu_route, abs=1e-12)


def test_coherence_zero_iff_diagonal():
    rng = np.random.default_rng(20)
    diag = np.diag(rng.dirichlet(np.ones(5))).astype(complex)
    assert coherence_param(diag) <= 1e-12
    offd = diag.copy()
    offd[0, 1] = offd[1, 0] = 0.05
    assert coherence_param(offd) > 1e-12


def test_uppermost_level():
    assert uppermost_level(_vacuum(6)) == 0
    rho = np.diag([0.5, 0.5 - 1e-5, 1e-5]).astype(complex)
    assert uppermost_level(rho) == 2
    assert uppermost_level(rho, threshold=1e-3) == 1
    assert uppermost_level(np.zeros((3, 3))) is None


def test_thermalization_two_level_mixture():
    rho = np.diag([0.5, 0.5]).astype(complex)
    assert thermalization(rho) == pytest.approx(1.0)


def test_thermalization_maximally_mixed():
    assert thermalization(np.eye(4, dtype=complex) / 4) == pytest.approx(1.0)


def test_thermalization_vacuum_undefined():
    assert thermalization(_vacuum(5)) is None


def test_offdiag_conjugate_symmetry(blockade_k2):
    _, rho = blockade_k2
    assert offdiag(rho, 2, 0) == pytest.approx(np.conj(offdiag(rho, 0, 2)))
    assert offdiag(np.diag([0.4, 0.6]).astype(complex), 0, 1) == 0.0
    with pytest.raises(ParameterError):
        offdiag(rho, 0, 15)
    with pytest.raises(ParameterError):
        offdiag(rho, -1, 0)


def test_offresonant_state_keeps_coherence(offresonant_k15):
    # Between resonances the steady state is mixed but not diagonal.
    _, rho = offresonant_k15
    magnitudes = [abs(offdiag(rho, n, m)) for n, m in DEFAULT_OFFDIAG_PAIRS]
    assert max(magnitudes) > 1e-3


def test_probability_normalization(blockade_k1, blockade_k2):
    for _, rho in (blockade_k1, blockade_k2):
        probs = photon_probs(rho)
        assert probs.sum() == pytest.approx(1.0, abs=1e-8)
        assert probs.min() >= 0.0


def test_coherence_report_bundle(blockade_k2):
    _, rho = blockade_k2
    report = coherence_report(rho)
    assert isinstance(report, CoherenceReport)
    assert report.purity == pytest.approx(purity(rho))
    assert report.vn_entropy == pytest.approx(vn_entropy(rho))
    assert report.linear_entropy == pytest.approx(1.0 - purity(rho))
    assert report.coherence == pytest.approx(coherence_param(rho))
    assert report.thermalization == pytest.approx(thermalization(rho))
    assert set(report.offdiag) == set(DEFAULT_OFFDIAG_PAIRS)
    assert report.offdiag[(2, 1)] == pytest.approx(offdiag(rho, 2, 1))
