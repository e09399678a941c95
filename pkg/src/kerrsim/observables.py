"""Scalar diagnostics of a cavity state.

Photon-number statistics (probabilities, truncation fidelity, Fano factor)
and the coherence/entropy measures used to characterize blockade steady
states: purity mu = tr(rho^2), von Neumann entropy S (natural log), linear
entropy S_L = 1 - mu, the coherence parameter

    C = sum_{n != m} |rho_nm|^2 = mu(rho) - mu(diag rho),

and the thermalization measure

    T = S_L / sqrt((1 + mu - 2 p_0)(1 + mu - 2 p_max)),

a linear entropy normalized against the pure states |0> and |n_max>, where
n_max is the uppermost populated Fock level (largest n with P_n > 1e-6).

Observables that are undefined for a given state (Fano factor of vacuum,
T with a vanishing denominator) return None rather than raising or
dividing silently.
"""

from dataclasses import dataclass

import numpy as np

from kerrsim.errors import ParameterError
from kerrsim.liouvillian import _as_state

DEFAULT_OFFDIAG_PAIRS = ((1, 0), (2, 0), (2, 1), (3, 0), (3, 1), (3, 2))


@dataclass(frozen=True)
class PhotonStats:
    probs: np.ndarray
    mean_n: float
    fano: float | None


@dataclass(frozen=True)
class CoherenceReport:
    purity: float
    vn_entropy: float
    linear_entropy: float
    coherence: float
    thermalization: float | None
    offdiag: dict


def photon_probs(rho) -> np.ndarray:
    """Diagonal of rho, clamped to [0, 1]."""
    r = _as_state(rho)
    return np.clip(np.diag(r).real, 0.0, 1.0)


def truncation_fidelity(rho, m: int) -> float:
    """F_m = sum_{n<=m} P_n, the fidelity of the m-photon truncation."""
    probs = photon_probs(rho)
    if not isinstance(m, (int, np.integer)) or m < 0 or m >= probs.size:
        raise ParameterError(f"truncation level {m!r} outside 0..{probs.size - 1}")
    return float(probs[: m + 1].sum())


def mean_photon_number(rho) -> float:
    probs = photon_probs(rho)
    return float(np.arange(probs.size) @ probs)


def fano(rho) -> float | None:
    """Fano factor (<n^2> - <n>^2)/<n>; None for vacuum (undefined)."""
    probs = photon_probs(rho)
    n = np.arange(probs.size)
    mean = float(n @ probs)
    if mean <= 1e-12:
        return None
    second = float((n * n) @ probs)
    return (second - mean * mean) / mean


def photon_stats(rho) -> PhotonStats:
    probs = photon_probs(rho)
    n = np.arange(probs.size)
    mean = float(n @ probs)
    return PhotonStats(probs=probs, mean_n=mean, fano=fano(rho))


def purity(rho) -> float:
    r = _as_state(rho)
    return float(np.einsum("ij,ji->", r, r).real)


def vn_entropy(rho) -> float:
    """von Neumann entropy -tr(rho ln rho), eigenvalues clamped to [0, 1]."""
    r = _as_state(rho)
    lam = np.linalg.eigvalsh(0.5 * (r + r.conj().T))
    lam = np.clip(lam, 0.0, 1.0)
    nz = lam[lam > 0.0]
    return float(-(nz * np.log(nz)).sum())


def linear_entropy(rho) -> float:
    return 1.0 - purity(rho)


def coherence_param(rho, normalized: bool = False) -> float:
    """Sum of squared off-diagonal magnitudes.

    With normalized=True the value is divided by its maximum 1 - 1/dim
    (attained by the even superposition of all Fock states).
    """
    r = _as_state(rho)
    total = float((np.abs(r) ** 2).sum())
    diag = float((np.abs(np.diag(r)) ** 2).sum())
    c = total - diag
    if normalized:
        c = c / (1.0 - 1.0 / r.shape[0])
    return c


def uppermost_level(rho, threshold: float = 1e-6) -> int | None:
    """Largest Fock index with population above threshold; None if none."""
    probs = photon_probs(rho)
    populated = np.nonzero(probs > threshold)[0]
    if populated.size == 0:
        return None
    return int(populated[-1])


def thermalization(rho) -> float | None:
    """Normalized linear entropy T; None when the normalization vanishes."""
    probs = photon_probs(rho)
    mu = purity(rho)
    n_max = uppermost_level(rho)
    if n_max is None:
        return None
    p0 = float(probs[0])
    p_max = float(probs[n_max])
    denom_sq = (1.0 + mu - 2.0 * p0) * (1.0 + mu - 2.0 * p_max)
    if denom_sq <= 1e-12:
        return None
    return (1.0 - mu) / float(np.sqrt(denom_sq))


def offdiag(rho, n: int, m: int) -> complex:
    """Matrix element <n|rho|m>."""
    r = _as_state(rho)
    dim = r.shape[0]
    for idx in (n, m):
        if not isinstance(idx, (int, np.integer)) or idx < 0 or idx >= dim:
            raise ParameterError(f"Fock index {idx!r} outside 0..{dim - 1}")
    return complex(r[n, m])


def coherence_report(rho, pairs=DEFAULT_OFFDIAG_PAIRS) -> CoherenceReport:
    """Bundle of all coherence and entropy measures for one state."""
    return CoherenceReport(
        purity=purity(rho),
        vn_entropy=vn_entropy(rho),
        linear_entropy=linear_entropy(rho),
        coherence=coherence_param(rho),
        thermalization=thermalization(rho),
        offdiag={(n, m): offdiag(rho, n, m) for n, m in pairs},
    )
