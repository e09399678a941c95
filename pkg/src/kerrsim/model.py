"""Physical parameters and rotating-frame Hamiltonians for the driven Kerr cavity.

The cavity is a single Kerr-nonlinear mode driven by a classical field.  In
the frame rotating at the drive frequency the Hamiltonian is

    H = Delta_k n + chi n(n - k) + eps (a + a^dag),        (hbar = 1)

where the tuning parameter k = (omega_d - omega0)/chi + 1 locates the drive
relative to the anharmonic ladder: integer k puts the k-photon transition
|0> -> |k> on resonance.  All rates are expressed in units of the damping
constant gamma.
"""

from dataclasses import dataclass

import numpy as np

from kerrsim.errors import ParameterError, TruncationError
from kerrsim.fock_algebra import annihilation


@dataclass(frozen=True)
class SystemParams:
    """Cavity parameters, all rates in units of gamma."""

    chi: float
    eps: float
    gamma: float = 1.0
    n_th: float = 0.0
    dim: int = 15

    def __post_init__(self):
        if not self.chi > 0:
            raise ParameterError(f"chi must be positive, got {self.chi}")
        if not self.eps >= 0:
            raise ParameterError(f"eps must be nonnegative, got {self.eps}")
        if not self.gamma > 0:
            raise ParameterError(f"gamma must be positive, got {self.gamma}")
        if not self.n_th >= 0:
            raise ParameterError(f"n_th must be nonnegative, got {self.n_th}")
        if not (isinstance(self.dim, (int, np.integer)) and self.dim >= 2):
            raise ParameterError(f"dim must be an integer >= 2, got {self.dim!r}")

    @property
    def well_resolved(self) -> bool:
        """Diagnostic flag for the blockade regime gamma << eps << chi."""
        return self.gamma < self.eps / 3 and self.eps < self.chi / 3


@dataclass(frozen=True)
class DriveSpec:
    """Lab-frame cavity and drive frequencies (same units as chi)."""

    omega0: float
    omega_d: float

    def __post_init__(self):
        if not (np.isfinite(self.omega0) and np.isfinite(self.omega_d)):
            raise ParameterError("drive frequencies must be finite")


@dataclass(frozen=True)
class TuningPoint:
    """Drive placement: tuning parameter k and residual detuning Delta_k."""

    k: float
    delta_k: float = 0.0

    def __post_init__(self):
        if not (np.isfinite(self.k) and np.isfinite(self.delta_k)):
            raise ParameterError("tuning parameters must be finite")


def k_from_frequencies(drive: DriveSpec, chi: float) -> TuningPoint:
    """Convert lab-frame frequencies to the tuning parameter.

    k = (omega_d - omega0)/chi + 1, with zero residual detuning at that k.
    """
    if not chi > 0:
        raise ParameterError(f"chi must be positive, got {chi}")
    k = (drive.omega_d - drive.omega0) / chi + 1.0
    return TuningPoint(k=k, delta_k=0.0)


def _hamiltonian(dim, chi, eps, k, delta_k):
    n = np.arange(dim, dtype=float)
    a = annihilation(dim)
    h = np.diag(delta_k * n + chi * n * (n - k)).astype(complex)
    h += eps * (a + a.conj().T)
    return h


def hamiltonian_rot(params: SystemParams, point: TuningPoint) -> np.ndarray:
    """Rotating-frame Hamiltonian Delta_k n + chi n(n-k) + eps (a + a^dag)."""
    return _hamiltonian(params.dim, params.chi, params.eps, point.k, point.delta_k)


def hamiltonian_trunc(params: SystemParams, k: int, trunc_dim: int) -> np.ndarray:
    """Resonant Hamiltonian on a hard-truncated space of trunc_dim levels.

    Same formula as hamiltonian_rot at Delta_k = 0; the truncation must keep
    the resonant pair |0>, |k>, so trunc_dim >= k + 1 is required.
    """
    if not isinstance(k, (int, np.integer)):
        raise ParameterError(f"truncated Hamiltonian needs integer k, got {k!r}")
    if trunc_dim < k + 1:
        raise TruncationError(
            f"trunc_dim={trunc_dim} cannot hold the resonant pair |0>, |{k}>"
        )
    return _hamiltonian(trunc_dim, params.chi, params.eps, float(k), 0.0)
