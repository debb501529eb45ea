"""Baths, modulators, grids, traces, and shared series machinery."""

from .bath import LorentzBath, require_positive, spectral_density
from .grid import TimeGrid
from .modulator import DriveMod, HOMod, Modulator, NoMod, ReservoirMod
from .series import (
    DEFAULT_CAP,
    DEFAULT_TOL,
    poisson_weight_array,
    poisson_weights,
    series_length,
)
from .trace import PopulationTrace, max_deviation

__all__ = [
    "LorentzBath",
    "require_positive",
    "spectral_density",
    "TimeGrid",
    "DriveMod",
    "HOMod",
    "Modulator",
    "NoMod",
    "ReservoirMod",
    "DEFAULT_CAP",
    "DEFAULT_TOL",
    "poisson_weight_array",
    "poisson_weights",
    "series_length",
    "PopulationTrace",
    "max_deviation",
]
