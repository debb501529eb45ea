"""System operators on the TLS x oscillator space."""

import numpy as np
from numpy.typing import ArrayLike

from ..core import LorentzBath
from ..types import ComplexArray
from .config import HeomConfig

SIGMA_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
SIGMA_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)


def annihilation(fock_dim: int) -> ComplexArray:
    """Truncated ladder operator with <n-1|a|n> = sqrt(n)."""
    return np.diag(np.sqrt(np.arange(1, fock_dim)), k=1).astype(complex)


def tls_operator(op: ComplexArray, fock_dim: int) -> ComplexArray:
    """Lift a TLS operator to the joint space."""
    return np.kron(op, np.eye(fock_dim))


def build_hsa(config: HeomConfig) -> ComplexArray:
    """
    System Hamiltonian epsilon/2*sz + omega0*a^dag a + g0*sz*(a + a^dag).

    The basis is |e>, |g> for the TLS tensored with the Fock states.

    Parameters
    ----------
    config
        Hierarchy configuration.

    Returns
    -------
        Hermitian matrix of dimension 2*fock_dim.
    """
    a = annihilation(config.fock_dim)
    tls_eye = np.eye(2)
    fock_eye = np.eye(config.fock_dim)
    return (
        0.5 * config.epsilon * np.kron(SIGMA_Z, fock_eye)
        + config.omega0 * np.kron(tls_eye, a.conj().T @ a)
        + config.g0 * np.kron(SIGMA_Z, a + a.conj().T)
    )


def correlation_function(bath: LorentzBath, t: ArrayLike) -> complex | ComplexArray:
    """
    Bath correlation function alpha*exp(-(omega_c + i*epsilon)*t).

    Examples
    --------
    >>> bath = LorentzBath(alpha=0.01, omega_c=0.2, epsilon=1.5)
    >>> float(correlation_function(bath, 0.0).real)
    0.01
    """
    t = np.asarray(t, dtype=float)
    if np.any(t < 0):
        msg = "t must be non-negative"
        raise ValueError(msg)
    value = bath.alpha * np.exp(-complex(bath.omega_c, bath.epsilon) * t)
    return value[()]
