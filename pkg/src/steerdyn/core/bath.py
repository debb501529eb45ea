"""Lorentz bath."""

import numpy as np
from numpy.typing import ArrayLike
from pydantic import BaseModel, ConfigDict, ValidationInfo, field_validator

from ..types import FloatLike


def require_positive(value: float, info: ValidationInfo) -> float:
    """Field validator rejecting non-positive values."""
    if not value > 0:
        msg = f"{info.field_name} must be positive"
        raise ValueError(msg)
    return value


class LorentzBath(BaseModel):
    """
    Dissipative environment with a Lorentz spectral density.

    Attributes
    ----------
    alpha
        Dimensionless coupling constant.
    omega_c
        Cutoff frequency, the half-width of the Lorentz peak.
    epsilon
        TLS transition frequency, also the center of the Lorentz peak.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    alpha: float
    omega_c: float
    epsilon: float

    check_positive = field_validator("alpha", "omega_c", "epsilon")(require_positive)


def spectral_density(bath: LorentzBath, omega: ArrayLike) -> FloatLike:
    """
    Evaluate the Lorentz spectral density J(omega).

    Negative frequencies are allowed; the density is extended over the whole
    real axis.

    Parameters
    ----------
    bath
        Lorentz bath.
    omega
        Frequency or array of frequencies.

    Returns
    -------
        J(omega), with the shape of `omega`.

    Examples
    --------
    >>> bath = LorentzBath(alpha=1.0, omega_c=1.0, epsilon=2.0)
    >>> round(float(spectral_density(bath, 2.0)) * np.pi, 12)
    1.0
    """
    omega = np.asarray(omega, dtype=float)
    detuning = omega - bath.epsilon
    value = bath.alpha * bath.omega_c / (np.pi * (detuning**2 + bath.omega_c**2))
    return value[()]
