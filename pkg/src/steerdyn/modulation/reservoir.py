"""Multi-mode ancillary reservoir."""

import numpy as np
from numpy.typing import ArrayLike
from pydantic import BaseModel, ConfigDict, Field, field_validator

from ..core import DEFAULT_CAP, DEFAULT_TOL, ReservoirMod, poisson_weight_array
from ..types import FloatArray, FloatLike


class ReservoirSpectral(BaseModel):
    """
    Super-Ohmic reservoir spectral density with a Lorentz-type cutoff.

    Attributes
    ----------
    chi
        Coupling scale; the high-frequency limit of the density is chi/pi.
    eta
        Cutoff frequency.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    chi: float = Field(ge=0)
    eta: float

    @field_validator("eta")
    @classmethod
    def _check_eta(cls, value: float) -> float:
        if not value > 0:
            msg = "eta must be positive"
            raise ValueError(msg)
        return value

    @property
    def Lam(self) -> float:  # noqa: N802
        """Steering parameter chi/eta."""
        return self.chi / self.eta

    @classmethod
    def from_modulator(cls, mod: ReservoirMod) -> "ReservoirSpectral":
        """Spectral description of a reservoir modulator."""
        return cls(chi=mod.chi, eta=mod.eta)


def reservoir_spectral_density(spec: ReservoirSpectral, eps: ArrayLike) -> FloatLike:
    """
    Evaluate the reservoir density chi*eps**2 / (pi*(eps**2 + eta**2)).

    Examples
    --------
    >>> spec = ReservoirSpectral(chi=3.0, eta=3.0)
    >>> round(float(reservoir_spectral_density(spec, 3.0)) * 2 * np.pi, 12)
    3.0
    """
    eps = np.asarray(eps, dtype=float)
    value = spec.chi * eps**2 / (np.pi * (eps**2 + spec.eta**2))
    return value[()]


def modulation_G(t: ArrayLike, Lam: float, eta: float) -> complex | np.ndarray:  # noqa: N802, N803
    """
    Reservoir modulation function exp(Lam*exp(-eta*t) - Lam).

    Parameters
    ----------
    t
        Time or array of times, non-negative.
    Lam
        Steering parameter chi/eta.
    eta
        Reservoir cutoff frequency.

    Returns
    -------
        Complex value (real for this spectral family), shaped like `t`.
    """
    t = np.asarray(t, dtype=float)
    if np.any(t < 0):
        msg = "t must be non-negative"
        raise ValueError(msg)
    value = np.exp(Lam * np.exp(-eta * t) - Lam).astype(complex)
    return value[()]


def multimode_weights(
    Lam: float,  # noqa: N803
    tol: float = DEFAULT_TOL,
    cap: int = DEFAULT_CAP,
) -> FloatArray:
    """Poisson weights of the reservoir modulation function series."""
    return poisson_weight_array(Lam, tol=tol, cap=cap)
