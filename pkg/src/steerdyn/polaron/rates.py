"""Relaxation and dephasing rates in the weak-coupling limit."""

import logging

import numpy as np
from numpy.typing import ArrayLike

from ..core import (
    DEFAULT_CAP,
    DEFAULT_TOL,
    LorentzBath,
    PopulationTrace,
    TimeGrid,
    max_deviation,
    poisson_weight_array,
)
from ..types import FloatArray, SolverTag

logger = logging.getLogger(__name__)

CROSS_CHECK_TOL = 5e-3


def _lorentz_series(
    bath: LorentzBath, lam: float, omega0: float, tol: float, cap: int
) -> float:
    if not omega0 > 0:
        msg = "omega0 must be positive"
        raise ValueError(msg)
    weights = poisson_weight_array(lam, tol=tol, cap=cap)
    shifts = np.arange(weights.size) * omega0
    return float(np.sum(weights / (shifts**2 + bath.omega_c**2)))


def relaxation_rate(
    bath: LorentzBath,
    lam: float,
    omega0: float,
    tol: float = DEFAULT_TOL,
    cap: int = DEFAULT_CAP,
) -> float:
    """
    Relaxation rate 1/T1 of the oscillator-modulated TLS.

    1/T1 = 2*pi * sum_l w_l * J(epsilon - l*omega0), which for the Lorentz
    bath is 2*alpha*omega_c * sum_l w_l / ((l*omega0)**2 + omega_c**2).
    The level shift is neglected.

    Parameters
    ----------
    bath
        Lorentz bath.
    lam
        Steering parameter (g0/omega0)**2.
    omega0
        Oscillator frequency.
    tol
        Poisson tail-mass tolerance.
    cap
        Poisson series cap.

    Returns
    -------
        Relaxation rate, strictly positive.

    Examples
    --------
    >>> bath = LorentzBath(alpha=0.25, omega_c=7.5, epsilon=1.0)
    >>> round(relaxation_rate(bath, 0.0, 5.0), 12)
    0.066666666667
    """
    series = _lorentz_series(bath, lam, omega0, tol, cap)
    return 2.0 * bath.alpha * bath.omega_c * series


def dephasing_rate(
    bath: LorentzBath,
    lam: float,
    omega0: float,
    tol: float = DEFAULT_TOL,
    cap: int = DEFAULT_CAP,
) -> float:
    """Dephasing rate 1/T2, one half of the relaxation rate."""
    series = _lorentz_series(bath, lam, omega0, tol, cap)
    return bath.alpha * bath.omega_c * series


def relaxation_time(
    bath: LorentzBath,
    lam: float,
    omega0: float,
    tol: float = DEFAULT_TOL,
    cap: int = DEFAULT_CAP,
) -> float:
    """Relaxation time T1."""
    return 1.0 / relaxation_rate(bath, lam, omega0, tol=tol, cap=cap)


def dephasing_time(
    bath: LorentzBath,
    lam: float,
    omega0: float,
    tol: float = DEFAULT_TOL,
    cap: int = DEFAULT_CAP,
) -> float:
    """Dephasing time T2."""
    return 1.0 / dephasing_rate(bath, lam, omega0, tol=tol, cap=cap)


def rate_curve(
    bath: LorentzBath,
    lams: ArrayLike,
    omega0: float,
    tol: float = DEFAULT_TOL,
    cap: int = DEFAULT_CAP,
) -> FloatArray:
    """T1 at each steering parameter in `lams`."""
    lams = np.asarray(lams, dtype=float)
    return np.array(
        [relaxation_time(bath, lam, omega0, tol=tol, cap=cap) for lam in lams]
    )


def exp_approx_trace(T1: float, grid: TimeGrid) -> PopulationTrace:  # noqa: N803
    """
    Exponential approximation P(t) = 2*exp(-t/T1) - 1.

    Parameters
    ----------
    T1
        Relaxation time.
    grid
        Sampling grid.

    Returns
    -------
        Trace tagged exp_approx.
    """
    if not T1 > 0:
        msg = "T1 must be positive"
        raise ValueError(msg)
    times = grid.times()
    values = 2.0 * np.exp(-times / T1) - 1.0
    return PopulationTrace.from_arrays(
        times, values, SolverTag.exp_approx, {"T1": T1}
    )


def cross_check(
    laplace_trace: PopulationTrace, volterra_trace: PopulationTrace
) -> float:
    """
    Largest disagreement between Laplace and Volterra traces.

    Logs a warning when the traces differ by more than 5e-3; the Volterra
    trace is then the one to trust.
    """
    delta = max_deviation(laplace_trace, volterra_trace)
    if delta > CROSS_CHECK_TOL:
        logger.warning(
            "Laplace and Volterra traces differ by %.3g (> %g); "
            "prefer the Volterra trace",
            delta,
            CROSS_CHECK_TOL,
        )
    return delta
