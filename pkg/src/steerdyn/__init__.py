"""Controllable decoherence of a dissipative two-level system."""

from .core import (
    DriveMod,
    HOMod,
    LorentzBath,
    NoMod,
    PopulationTrace,
    ReservoirMod,
    TimeGrid,
)
from .heom import HeomConfig, heom_evolve
from .laplace import kernel_for, population_trace_laplace
from .polaron import (
    closed_form_P_lambda0,
    dephasing_rate,
    expsum_for,
    relaxation_rate,
    volterra_solve,
)
from .runs import RunRecord, ScenarioConfig, parse_config, simulate, solve, sweep
from .version import __version__

__all__ = [
    "DriveMod",
    "HOMod",
    "LorentzBath",
    "NoMod",
    "PopulationTrace",
    "ReservoirMod",
    "TimeGrid",
    "HeomConfig",
    "heom_evolve",
    "kernel_for",
    "population_trace_laplace",
    "closed_form_P_lambda0",
    "dephasing_rate",
    "expsum_for",
    "relaxation_rate",
    "volterra_solve",
    "RunRecord",
    "ScenarioConfig",
    "parse_config",
    "simulate",
    "solve",
    "sweep",
    "__version__",
]
