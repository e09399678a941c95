"""Dense operator kernel on a truncated Fock space.

Everything in the package works with plain complex numpy arrays; this module
provides the ladder-operator constructors, the displacement and parity
operators needed for phase-space work, and the two decompositions (matrix
exponential, Hermitian eigendecomposition) that the solvers build on.

Operators are constructed on the full requested dimension.  Identities that
truncation necessarily breaks (the commutator [a, a^dag] = 1, unitarity of
the displacement operator) hold only away from the top Fock level, and the
tests assert them only there.
"""

from functools import lru_cache

import numpy as np
import scipy.linalg

from kerrsim.errors import ContractViolation, DimensionError


def _check_dim(dim):
    if not isinstance(dim, (int, np.integer)) or dim < 1:
        raise DimensionError(f"Fock dimension must be a positive integer, got {dim!r}")


def annihilation(dim: int) -> np.ndarray:
    """Annihilation operator a with <n-1|a|n> = sqrt(n)."""
    _check_dim(dim)
    return np.diag(np.sqrt(np.arange(1, dim, dtype=float)), 1).astype(complex)


def creation(dim: int) -> np.ndarray:
    """Creation operator a^dag, the adjoint of annihilation."""
    return annihilation(dim).conj().T


def number(dim: int) -> np.ndarray:
    """Photon-number operator a^dag a = diag(0, 1, ..., dim-1)."""
    _check_dim(dim)
    return np.diag(np.arange(dim, dtype=float)).astype(complex)


def identity(dim: int) -> np.ndarray:
    _check_dim(dim)
    return np.eye(dim, dtype=complex)


def parity(dim: int) -> np.ndarray:
    """Photon-number parity exp(i pi a^dag a) = diag(+1, -1, +1, ...)."""
    _check_dim(dim)
    signs = np.where(np.arange(dim) % 2 == 0, 1.0, -1.0)
    return np.diag(signs).astype(complex)


@lru_cache(maxsize=32)
def _displacement_basis(dim):
    # Eigendecomposition of the Hermitian generator K = i(a^dag - a).
    # Cached per dimension: Wigner grids evaluate thousands of displacements
    # of the same size and only the phase of alpha changes between them.
    a = annihilation(dim)
    lam, u = np.linalg.eigh(1j * (a.conj().T - a))
    return lam, u


def displacement(dim: int, alpha: complex) -> np.ndarray:
    """Displacement operator D(alpha) = exp(alpha a^dag - alpha* a).

    Evaluated through the cached eigendecomposition of i(a^dag - a):
    with alpha = r e^{i phi} and R = diag(e^{i phi n}),

        D(alpha) = R exp(-i r K) R^dag,  K = i(a^dag - a),

    which is exactly the matrix exponential of the generator.  Unitary up to
    truncation error at the top Fock levels.
    """
    _check_dim(dim)
    r = abs(alpha)
    if r == 0.0:
        return identity(dim)
    phi = np.angle(alpha)
    lam, u = _displacement_basis(dim)
    core = (u * np.exp(-1j * r * lam)) @ u.conj().T
    if phi == 0.0:
        return core
    ph = np.exp(1j * phi * np.arange(dim))
    return (ph[:, None] * core) * ph.conj()[None, :]


def expm(m: np.ndarray) -> np.ndarray:
    """Matrix exponential (Pade approximant with scaling and squaring)."""
    m = np.asarray(m, dtype=complex)
    if not np.all(np.isfinite(m)):
        raise ContractViolation("matrix exponential of non-finite input")
    return scipy.linalg.expm(m)


def hermitian_eig(m: np.ndarray):
    """Eigendecomposition of a Hermitian matrix.

    The input is symmetrized as (m + m^dag)/2 before decomposition; an
    anti-Hermitian part larger than 1e-10 (relative) is rejected.  Returns
    (eigenvalues ascending, eigenvector matrix V) with m = V diag(lam) V^dag.
    """
    m = np.asarray(m, dtype=complex)
    h = 0.5 * (m + m.conj().T)
    scale = np.linalg.norm(m)
    if np.linalg.norm(m - h) > 1e-10 * max(scale, 1.0):
        raise ContractViolation("hermitian_eig called with a non-Hermitian matrix")
    lam, v = np.linalg.eigh(h)
    return lam, v
