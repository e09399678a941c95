"""Lindblad superoperator for thermal single-photon loss, in vectorized form.

Vectorization convention (used by every module): column stacking,

    vec(rho)[i*N + j] = rho[j, i]        <=>  rho.flatten(order="F")

under which vec(A rho B) = (B^T kron A) vec(rho).  The master equation

    d rho/dt = -i[H, rho]
               + (gamma/2)(n_th + 1)(2 a rho a^dag - a^dag a rho - rho a^dag a)
               + (gamma/2) n_th      (2 a^dag rho a - a a^dag rho - rho a a^dag)

becomes d vec(rho)/dt = L vec(rho) with L dense of size N^2 x N^2.
"""

from dataclasses import dataclass, field

import numpy as np

from kerrsim.errors import ContractViolation, ShapeError
from kerrsim.fock_algebra import annihilation, identity


def vectorize(rho: np.ndarray) -> np.ndarray:
    """Column-stack a matrix into a vector."""
    rho = np.asarray(rho)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise ShapeError(f"vectorize expects a square matrix, got shape {rho.shape}")
    return rho.flatten(order="F").astype(complex)


def unvectorize(v: np.ndarray, dim: int | None = None) -> np.ndarray:
    """Invert vectorize; dim is inferred from the length when omitted."""
    v = np.asarray(v).ravel()
    if dim is None:
        dim = int(round(np.sqrt(v.size)))
    if dim * dim != v.size:
        raise ShapeError(f"vector of length {v.size} is not {dim}x{dim}")
    return v.reshape((dim, dim), order="F")


@dataclass(frozen=True)
class SuperOp:
    """Vectorized Liouvillian: N^2 x N^2 matrix acting on vec(rho).

    step_bound is the largest RK4 step admissible for this generator,
    0.01/max(gamma (n_th+1) dim, ||H||_2); it is recorded at build time
    because the ingredients are not recoverable from the matrix alone.
    """

    dim: int
    matrix: np.ndarray
    step_bound: float | None = field(default=None, compare=False)

    def __post_init__(self):
        m = np.asarray(self.matrix)
        if m.shape != (self.dim**2, self.dim**2):
            raise ShapeError(
                f"superoperator for dim {self.dim} must be "
                f"{self.dim**2}x{self.dim**2}, got {m.shape}"
            )


@dataclass(frozen=True)
class DensityMatrix:
    """Validated density operator: Hermitian, unit trace, positive."""

    mat: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.mat, dtype=complex)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ShapeError(f"density matrix must be square, got shape {m.shape}")
        scale = max(np.linalg.norm(m), 1.0)
        if np.linalg.norm(m - m.conj().T) > 1e-10 * scale:
            raise ContractViolation("density matrix is not Hermitian")
        if abs(np.trace(m) - 1.0) > 1e-10:
            raise ContractViolation(f"density matrix trace {np.trace(m)} != 1")
        if np.linalg.eigvalsh(0.5 * (m + m.conj().T)).min() < -1e-8:
            raise ContractViolation("density matrix has a negative eigenvalue")
        object.__setattr__(self, "mat", m)

    @property
    def dim(self) -> int:
        return self.mat.shape[0]


def _as_state(rho) -> np.ndarray:
    return rho.mat if isinstance(rho, DensityMatrix) else np.asarray(rho, dtype=complex)


def _sandwich(a_left: np.ndarray, b_right: np.ndarray) -> np.ndarray:
    # Superoperator of rho -> a_left rho b_right under column stacking.
    return np.kron(b_right.T, a_left)


def build_liouvillian(H: np.ndarray, gamma: float, n_th: float) -> SuperOp:
    """Assemble the Lindblad generator for Hamiltonian H and thermal loss."""
    H = np.asarray(H, dtype=complex)
    dim = H.shape[0]
    scale = max(np.linalg.norm(H), 1.0)
    if np.linalg.norm(H - H.conj().T) > 1e-10 * scale:
        raise ContractViolation("Liouvillian requires a Hermitian Hamiltonian")
    a = annihilation(dim)
    ad = a.conj().T
    one = identity(dim)

    L = -1j * (_sandwich(H, one) - _sandwich(one, H))
    L += (gamma / 2.0) * (n_th + 1.0) * (
        2.0 * _sandwich(a, ad) - _sandwich(ad @ a, one) - _sandwich(one, ad @ a)
    )
    L += (gamma / 2.0) * n_th * (
        2.0 * _sandwich(ad, a) - _sandwich(a @ ad, one) - _sandwich(one, a @ ad)
    )

    # h <= 0.01/max(gamma (n_th+1) dim, ||H||_2) keeps fixed-step RK4 stable
    # for the stiffest mode of this generator.
    h_norm = np.linalg.norm(H, 2)
    step_bound = 0.01 / max(gamma * (n_th + 1.0) * dim, h_norm, 1e-300)
    return SuperOp(dim=dim, matrix=L, step_bound=step_bound)


def apply(L: SuperOp, rho) -> np.ndarray:
    """Action of the generator on a state, returned as a matrix."""
    r = _as_state(rho)
    if r.shape != (L.dim, L.dim):
        raise ShapeError(f"state shape {r.shape} does not match dim {L.dim}")
    return unvectorize(L.matrix @ vectorize(r), L.dim)
