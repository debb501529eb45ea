"""Analytic population dynamics of the unmodulated TLS."""

import cmath

import numpy as np
from numpy.typing import ArrayLike

from ..core import LorentzBath, PopulationTrace, TimeGrid
from ..types import FloatLike, SolverTag

IMAG_TOL = 1e-12


def _excited_fraction(t: np.ndarray, alpha: float, omega_c: float) -> np.ndarray:
    theta = cmath.sqrt(omega_c**2 - 8.0 * alpha)
    if theta == 0:
        return np.exp(-0.5 * omega_c * t) * (1.0 + 0.5 * omega_c * t)
    # Re(theta) < omega_c, so both exponents decay
    ratio = omega_c / theta
    value = 0.5 * (
        (1.0 + ratio) * np.exp(0.5 * (theta - omega_c) * t)
        + (1.0 - ratio) * np.exp(-0.5 * (theta + omega_c) * t)
    )
    if np.any(np.abs(value.imag) >= IMAG_TOL):
        msg = "closed form left an imaginary residue"
        raise ArithmeticError(msg)
    return value.real


def closed_form_P_lambda0(  # noqa: N802
    t: ArrayLike, alpha: float, omega_c: float, rho_ee0: float = 1.0
) -> FloatLike:
    """
    Population difference of the unmodulated TLS with a Lorentz bath.

    Evaluated in complex arithmetic so that the oscillatory regime
    omega_c**2 < 8*alpha needs no special casing.

    Parameters
    ----------
    t
        Time or array of times, non-negative.
    alpha
        Coupling constant.
    omega_c
        Cutoff frequency.
    rho_ee0
        Initial excited-state population.

    Returns
    -------
        P(t), shaped like `t`.

    Examples
    --------
    >>> float(closed_form_P_lambda0(0.0, 0.25, 7.5))
    1.0
    """
    if not alpha > 0:
        msg = "alpha must be positive"
        raise ValueError(msg)
    if not omega_c > 0:
        msg = "omega_c must be positive"
        raise ValueError(msg)
    t = np.asarray(t, dtype=float)
    if np.any(t < 0):
        msg = "t must be non-negative"
        raise ValueError(msg)
    value = 2.0 * rho_ee0 * _excited_fraction(t, alpha, omega_c) - 1.0
    return value[()]


def closed_form_trace(
    bath: LorentzBath, rho_ee0: float, grid: TimeGrid
) -> PopulationTrace:
    """Closed-form trace of an unmodulated (or drive-renormalized) bath."""
    times = grid.times()
    values = closed_form_P_lambda0(times, bath.alpha, bath.omega_c, rho_ee0)
    params = {"alpha": bath.alpha, "omega_c": bath.omega_c, "rho_ee0": rho_ee0}
    return PopulationTrace.from_arrays(times, values, SolverTag.closed_form, params)
