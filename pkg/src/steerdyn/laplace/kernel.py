"""Laplace-domain memory kernels."""

import logging
from collections.abc import Callable
from functools import cached_property
from typing import Any

import numpy as np
from numpy.typing import ArrayLike
from pydantic import BaseModel, ConfigDict, Field

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

logger = logging.getLogger(__name__)

Transform = Callable[[ArrayLike], complex | ComplexArray]


class LaplaceKernel(BaseModel):
    """
    Laplace-transformed memory kernel mu(z).

    The kernel is a Poisson-weighted series. With u = z + omega_c:

    - single_mode: 2*alpha * sum_l w_l * u / (u**2 + (l*spacing)**2)
    - multimode:   2*alpha * sum_l w_l / (u + l*spacing)
    - bare:        2*alpha / u

    Attributes
    ----------
    family
        Kernel family.
    alpha
        Bath coupling constant.
    omega_c
        Bath cutoff frequency.
    weights
        Poisson weights w_0, ..., w_L.
    spacing
        Oscillator frequency (single_mode) or reservoir cutoff (multimode).
    params
        Parameter echo.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    family: KernelFamily
    alpha: float = Field(ge=0)
    omega_c: float = Field(gt=0)
    weights: tuple[float, ...] = (1.0,)
    spacing: float = Field(default=0.0, ge=0)
    params: dict[str, Any] = Field(default_factory=dict)

    @cached_property
    def weight_array(self) -> FloatArray:
        """Poisson weights as an array."""
        return np.asarray(self.weights, dtype=float)

    @cached_property
    def shifts(self) -> FloatArray:
        """Series frequency shifts l*spacing."""
        return np.arange(len(self.weights)) * self.spacing

    def __call__(self, z: ArrayLike) -> complex | ComplexArray:
        """Evaluate mu(z) at one or many points."""
        u = np.asarray(z, dtype=complex) + self.omega_c
        if self.family == KernelFamily.bare:
            value = 2.0 * self.alpha / u
        else:
            u_ = u[..., np.newaxis]
            if self.family == KernelFamily.single_mode:
                terms = u_ / (u_**2 + self.shifts**2)
            else:
                terms = 1.0 / (u_ + self.shifts)
            value = 2.0 * self.alpha * (terms @ self.weight_array)
        return value[()]


def kernel_bare(bath: LorentzBath) -> LaplaceKernel:
    """
    Unmodulated kernel 2*alpha/(z + omega_c).

    Examples
    --------
    >>> bath = LorentzBath(alpha=0.25, omega_c=7.5, epsilon=1.0)
    >>> complex(kernel_bare(bath)(0.5)) == 0.5 / 8.0
    True
    """
    return LaplaceKernel(
        family=KernelFamily.bare,
        alpha=bath.alpha,
        omega_c=bath.omega_c,
        params={"alpha": bath.alpha, "omega_c": bath.omega_c},
    )


def kernel_single_mode(
    bath: LorentzBath,
    lam: float,
    omega0: float,
    tol: float = DEFAULT_TOL,
    cap: int = DEFAULT_CAP,
) -> LaplaceKernel:
    """
    Kernel for a TLS modulated by a single-mode oscillator.

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
    logger.debug("Single-mode kernel uses %d terms", weights.size)
    return LaplaceKernel(
        family=KernelFamily.single_mode,
        alpha=bath.alpha,
        omega_c=bath.omega_c,
        weights=tuple(weights.tolist()),
        spacing=omega0,
        params={
            "alpha": bath.alpha,
            "omega_c": bath.omega_c,
            "lam": lam,
            "omega0": omega0,
            "tol": tol,
        },
    )


def kernel_multimode(
    bath: LorentzBath,
    Lam: float,  # noqa: N803
    eta: float,
    tol: float = DEFAULT_TOL,
    cap: int = DEFAULT_CAP,
) -> LaplaceKernel:
    """
    Kernel for a TLS modulated by an ancillary reservoir.

    Parameters
    ----------
    bath
        Lorentz bath.
    Lam
        Steering parameter chi/eta.
    eta
        Reservoir cutoff frequency.
    tol
        Poisson tail-mass tolerance.
    cap
        Poisson series cap.

    Returns
    -------
        Kernel of family multimode.
    """
    if not eta > 0:
        msg = "eta must be positive"
        raise ValueError(msg)
    weights = multimode_weights(Lam, tol=tol, cap=cap)
    logger.debug("Multimode kernel uses %d terms", weights.size)
    return LaplaceKernel(
        family=KernelFamily.multimode,
        alpha=bath.alpha,
        omega_c=bath.omega_c,
        weights=tuple(weights.tolist()),
        spacing=eta,
        params={
            "alpha": bath.alpha,
            "omega_c": bath.omega_c,
            "Lam": Lam,
            "eta": eta,
            "tol": tol,
        },
    )


def kernel_for(
    modulator: Modulator,
    bath: LorentzBath,
    tol: float = DEFAULT_TOL,
    cap: int = DEFAULT_CAP,
) -> LaplaceKernel:
    """
    Kernel for any modulator.

    A drive reduces to the bare kernel of the renormalized bath.
    """
    match modulator:
        case NoMod():
            return kernel_bare(bath)
        case HOMod():
            return kernel_single_mode(
                bath, modulator.lam, modulator.omega0, tol=tol, cap=cap
            )
        case ReservoirMod():
            return kernel_multimode(
                bath, modulator.Lam, modulator.eta, tol=tol, cap=cap
            )
        case DriveMod():
            return kernel_bare(driven_bath(bath, modulator))
    msg = f"Unsupported modulator: {modulator!r}"
    raise TypeError(msg)


def resolvent(kernel: LaplaceKernel, rho_ee0: float = 1.0) -> Transform:
    """
    Laplace transform of the excited population, rho_ee0 / (z + mu(z)).

    Returns
    -------
        Vectorized function of z.
    """

    def transform(z: ArrayLike) -> complex | ComplexArray:
        z = np.asarray(z, dtype=complex)
        return rho_ee0 / (z + kernel(z))

    return transform
