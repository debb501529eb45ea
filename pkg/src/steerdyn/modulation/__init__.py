"""Drive and reservoir modulators."""

from .drive import bessel_j0, driven_bath, effective_alpha
from .reservoir import (
    ReservoirSpectral,
    modulation_G,
    multimode_weights,
    reservoir_spectral_density,
)

__all__ = [
    "bessel_j0",
    "driven_bath",
    "effective_alpha",
    "ReservoirSpectral",
    "modulation_G",
    "multimode_weights",
    "reservoir_spectral_density",
]
