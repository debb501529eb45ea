"""Ancillary modulators of the TLS-bath coupling."""

import math
from typing import Annotated, Any, Literal

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


class NoMod(BaseModel):
    """No ancillary degree of freedom."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    kind: Literal["none"] = "none"


class HOMod(BaseModel):
    """
    Single-mode harmonic oscillator coupled to the TLS through sigma_z.

    Either `g0` or `lam` may be given; `lam` resolves to
    ``g0 = omega0 * sqrt(lam)``.

    Attributes
    ----------
    g0
        TLS-oscillator coupling.
    omega0
        Oscillator frequency.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    kind: Literal["ho"] = "ho"
    g0: float = Field(ge=0)
    omega0: float

    @model_validator(mode="before")
    @classmethod
    def _resolve_lambda(cls, data: Any) -> Any:  # noqa: ANN401
        if not isinstance(data, dict) or "lam" not in data:
            return data
        data = dict(data)
        lam = data.pop("lam")
        if "g0" in data:
            msg = "give either g0 or lam, not both"
            raise ValueError(msg)
        if not lam >= 0:
            msg = "lam must be non-negative"
            raise ValueError(msg)
        omega0 = data.get("omega0")
        if isinstance(omega0, int | float) and omega0 > 0:
            data["g0"] = omega0 * math.sqrt(lam)
        return data

    @field_validator("omega0")
    @classmethod
    def _check_omega0(cls, value: float) -> float:
        if not value > 0:
            msg = "omega0 must be positive"
            raise ValueError(msg)
        return value

    @property
    def lam(self) -> float:
        """Steering parameter (g0/omega0)**2."""
        return (self.g0 / self.omega0) ** 2


class ReservoirMod(BaseModel):
    """
    Multi-mode ancillary reservoir with a super-Ohmic Lorentz-cutoff density.

    Either `chi` or `Lam` may be given; `Lam` resolves to ``chi = Lam * eta``.

    Attributes
    ----------
    chi
        Reservoir coupling scale.
    eta
        Reservoir cutoff frequency.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    kind: Literal["reservoir"] = "reservoir"
    chi: float = Field(ge=0)
    eta: float

    @model_validator(mode="before")
    @classmethod
    def _resolve_lambda(cls, data: Any) -> Any:  # noqa: ANN401
        if not isinstance(data, dict) or "Lam" not in data:
            return data
        data = dict(data)
        lam = data.pop("Lam")
        if "chi" in data:
            msg = "give either chi or Lam, not both"
            raise ValueError(msg)
        if not lam >= 0:
            msg = "Lam must be non-negative"
            raise ValueError(msg)
        eta = data.get("eta")
        if isinstance(eta, int | float):
            data["chi"] = lam * eta
        return data

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


class DriveMod(BaseModel):
    """
    Periodic sigma_z drive A cos(Omega t).

    Attributes
    ----------
    amplitude_A
        Drive amplitude.
    frequency_Omega
        Drive frequency.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    kind: Literal["drive"] = "drive"
    amplitude_A: float = Field(ge=0)  # noqa: N815
    frequency_Omega: float  # noqa: N815

    @field_validator("frequency_Omega")
    @classmethod
    def _check_frequency(cls, value: float) -> float:
        if not value > 0:
            msg = "frequency_Omega must be positive"
            raise ValueError(msg)
        return value


Modulator = Annotated[
    NoMod | HOMod | ReservoirMod | DriveMod, Field(discriminator="kind")
]
