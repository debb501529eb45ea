"""Periodic-drive renormalization of the TLS-bath coupling."""

import logging

import numpy as np
from numpy.typing import ArrayLike
from scipy.special import j0

from ..core import DriveMod, LorentzBath
from ..types import FloatLike

logger = logging.getLogger(__name__)


def bessel_j0(x: ArrayLike) -> FloatLike:
    """
    Bessel function of the first kind, order zero.

    Examples
    --------
    >>> float(bessel_j0(0.0))
    1.0
    """
    return j0(np.asarray(x, dtype=float))[()]


def effective_alpha(drive: DriveMod, alpha: float) -> float:
    """
    Coupling constant renormalized by a fast periodic sigma_z drive.

    Only the zeroth Jacobi-Anger term is retained, so the driven TLS behaves
    as an undriven one with coupling J0(A/Omega)**2 * alpha.

    Parameters
    ----------
    drive
        Drive amplitude and frequency.
    alpha
        Bare coupling constant.

    Returns
    -------
        Renormalized coupling, between 0 and `alpha`.
    """
    if not alpha > 0:
        msg = "alpha must be positive"
        raise ValueError(msg)
    ratio = drive.amplitude_A / drive.frequency_Omega
    factor = float(bessel_j0(ratio)) ** 2
    return min(factor, 1.0) * alpha


def driven_bath(bath: LorentzBath, drive: DriveMod) -> LorentzBath:
    """
    Bath with the drive-renormalized coupling constant.

    Raises
    ------
    ValueError
        If A/Omega sits on a zero of J0, where the TLS decouples completely.
    """
    alpha = effective_alpha(drive, bath.alpha)
    logger.debug("Drive renormalizes alpha %g -> %g", bath.alpha, alpha)
    return LorentzBath(alpha=alpha, omega_c=bath.omega_c, epsilon=bath.epsilon)
