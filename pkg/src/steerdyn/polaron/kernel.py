"""Exponential-sum memory kernels."""

from typing import Any

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..core import (
    DEFAULT_CAP,
    DEFAULT_TOL,
    DriveMod,
    HOMod,
    LorentzBath,
    Modulator,
    NoMod,
    ReservoirMod,
    poisson_weight_array,
)
from ..modulation import driven_bath, multimode_weights
from ..types import ComplexArray, FloatArray, KernelFamily


class ExpSumKernel(BaseModel):
    """
    Memory kernel k(s) = sum_m weight_m * exp(-rate_m * s) + c.c.

    Each rate is stored as its real part (`decay`) and imaginary part
    (`frequency`).

    Attributes
    ----------
    family
        Kernel family, matching the Laplace kernel it mirrors.
    weights
        Real weights.
    decay
        Re(rate_m), all positive.
    frequency
        Im(rate_m).
    params
        Parameter echo.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    family: KernelFamily
    weights: tuple[float, ...]
    decay: tuple[float, ...]
    frequency: tuple[float, ...]
    params: dict[str, Any] = Field(default_factory=dict)

    @model_validator(mode="after")
    def _check_terms(self) -> "ExpSumKernel":
        if not len(self.weights) == len(self.decay) == len(self.frequency):
            msg = "weights, decay and frequency must have the same length"
            raise ValueError(msg)
        if any(a <= 0 for a in self.decay):
            msg = "rates must have positive real part"
            raise ValueError(msg)
        return self

    def rates(self) -> ComplexArray:
        """Complex decay rates."""
        return np.asarray(self.decay) + 1j * np.asarray(self.frequency)

    def __call__(self, s: FloatArray | float) -> FloatArray | float:
        """Evaluate k(s) at non-negative delays."""
        s = np.asarray(s, dtype=float)[..., np.newaxis]
        terms = np.exp(-np.asarray(self.decay) * s) * np.cos(
            np.asarray(self.frequency) * s
        )
        return (2.0 * terms @ np.asarray(self.weights))[()]


def expsum_bare(bath: LorentzBath) -> ExpSumKernel:
    """Unmodulated kernel 2*alpha*exp(-omega_c*s)."""
    return ExpSumKernel(
        family=KernelFamily.bare,
        weights=(bath.alpha,),
        decay=(bath.omega_c,),
        frequency=(0.0,),
        params={"alpha": bath.alpha, "omega_c": bath.omega_c},
    )


def expsum_single_mode(
    bath: LorentzBath,
    lam: float,
    omega0: float,
    tol: float = DEFAULT_TOL,
    cap: int = DEFAULT_CAP,
) -> ExpSumKernel:
    """
    Kernel 2*alpha * sum_l w_l * exp(-omega_c*s) * cos(l*omega0*s).

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
        Kernel of family single_mode.
    """
    if not omega0 > 0:
        msg = "omega0 must be positive"
        raise ValueError(msg)
    weights = poisson_weight_array(lam, tol=tol, cap=cap)
    index = np.arange(weights.size)
    return ExpSumKernel(
        family=KernelFamily.single_mode,
        weights=tuple((bath.alpha * weights).tolist()),
        decay=(bath.omega_c,) * weights.size,
        frequency=tuple((index * omega0).tolist()),
        params={
            "alpha": bath.alpha,
            "omega_c": bath.omega_c,
            "lam": lam,
            "omega0": omega0,
            "tol": tol,
        },
    )


def expsum_multimode(
    bath: LorentzBath,
    Lam: float,  # noqa: N803
    eta: float,
    tol: float = DEFAULT_TOL,
    cap: int = DEFAULT_CAP,
) -> ExpSumKernel:
    """Kernel 2*alpha * sum_l w_l(Lam) * exp(-(omega_c + l*eta)*s)."""
    if not eta > 0:
        msg = "eta must be positive"
        raise ValueError(msg)
    weights = multimode_weights(Lam, tol=tol, cap=cap)
    index = np.arange(weights.size)
    return ExpSumKernel(
        family=KernelFamily.multimode,
        weights=tuple((bath.alpha * weights).tolist()),
        decay=tuple((bath.omega_c + index * eta).tolist()),
        frequency=(0.0,) * weights.size,
        params={
            "alpha": bath.alpha,
            "omega_c": bath.omega_c,
            "Lam": Lam,
            "eta": eta,
            "tol": tol,
        },
    )


def expsum_for(
    modulator: Modulator,
    bath: LorentzBath,
    tol: float = DEFAULT_TOL,
    cap: int = DEFAULT_CAP,
) -> ExpSumKernel:
    """Exponential-sum kernel for any modulator."""
    match modulator:
        case NoMod():
            return expsum_bare(bath)
        case HOMod():
            return expsum_single_mode(
                bath, modulator.lam, modulator.omega0, tol=tol, cap=cap
            )
        case ReservoirMod():
            return expsum_multimode(
                bath, modulator.Lam, modulator.eta, tol=tol, cap=cap
            )
        case DriveMod():
            return expsum_bare(driven_bath(bath, modulator))
    msg = f"Unsupported modulator: {modulator!r}"
    raise TypeError(msg)
