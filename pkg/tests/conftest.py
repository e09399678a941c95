"""Shared fixtures: steady-state scans and single blockade points.

The session-scoped scans are the expensive shared inputs of the acceptance
suite; module tests use the cheap single-point fixtures so they stay fast
when run in isolation.
"""

import time
from dataclasses import dataclass

import numpy as np
import pytest

from kerrsim.liouvillian import build_liouvillian
from kerrsim.model import SystemParams, TuningPoint, hamiltonian_rot
from kerrsim.solvers import steady_state

CHI = 30.0
EPS_WEAK = 5.0
EPS_STRONG = 11.56
NTH = 0.01
DIM = 15

SCAN_KS = np.linspace(0.5, 4.5, 201)


def solve_steady(chi, eps, gamma, n_th, dim, k, method="null_space"):
    """One steady-state solve; returns (SuperOp, SteadyStateResult)."""
    params = SystemParams(chi=chi, eps=eps, gamma=gamma, n_th=n_th, dim=dim)
    H = hamiltonian_rot(params, TuningPoint(k=float(k)))
    L = build_liouvillian(H, gamma, n_th)
    return L, steady_state(L, method)


@dataclass
class ScanResult:
    ks: np.ndarray
    rhos: list
    elapsed: float

    def at(self, k):
        return self.rhos[int(np.argmin(np.abs(self.ks - k)))]


def run_scan(eps, n_th, ks=SCAN_KS, dim=DIM):
    rhos = []
    t0 = time.perf_counter()
    for k in ks:
        _, res = solve_steady(CHI, eps, 1.0, n_th, dim, k)
        rhos.append(res.rho_ss)
    return ScanResult(ks=np.asarray(ks), rhos=rhos, elapsed=time.perf_counter() - t0)


@pytest.fixture(scope="session")
def weak_drive_scan():
    """Steady states over k in [0.5, 4.5] at chi=30, eps=5, n_th=0.01."""
    return run_scan(EPS_WEAK, NTH)


@pytest.fixture(scope="session")
def strong_drive_points():
    """Steady states around the three-photon resonance at eps=11.56."""
    ks = np.round(np.arange(2.9, 3.1001, 0.02), 10)
    return run_scan(EPS_STRONG, NTH, ks=ks)


@pytest.fixture(scope="session")
def entropic_scan_zero():
    """Entropy-measure scan input at n_th = 0."""
    return run_scan(EPS_WEAK, 0.0)


@pytest.fixture(scope="session")
def entropic_scan_thermal():
    """Entropy-measure scan input at n_th = 0.05."""
    return run_scan(EPS_WEAK, 0.05)


@pytest.fixture(scope="session")
def blockade_k1():
    """(SuperOp, rho_ss) at the single-photon resonance, weak drive."""
    L, res = solve_steady(CHI, EPS_WEAK, 1.0, NTH, DIM, 1.0)
    return L, res.rho_ss


@pytest.fixture(scope="session")
def blockade_k2():
    """(SuperOp, rho_ss) at the two-photon resonance, weak drive."""
    L, res = solve_steady(CHI, EPS_WEAK, 1.0, NTH, DIM, 2.0)
    return L, res.rho_ss


@pytest.fixture(scope="session")
def offresonant_k15():
    """(SuperOp, rho_ss) between resonances at k = 1.5."""
    L, res = solve_steady(CHI, EPS_WEAK, 1.0, NTH, DIM, 1.5)
    return L, res.rho_ss
