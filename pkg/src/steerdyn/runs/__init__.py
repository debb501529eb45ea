"""Scenarios, solver dispatch, sweeps, presets and run records."""

from .config import HeomSettings, ScenarioConfig, parse_config
from .presets import PRESETS, preset_record
from .record import Curve, RunRecord
from .registry import SolverOutput, SolverRegistry, heom_config, solver_registry
from .settings import output_root, worker_count
from .solve import SolveResult, selected_solvers, simulate, solve
from .sweep import configure_point, run_points, sweep
from .util import hash_from_dict, run_id

__all__ = [
    "HeomSettings",
    "ScenarioConfig",
    "parse_config",
    "PRESETS",
    "preset_record",
    "Curve",
    "RunRecord",
    "SolverOutput",
    "SolverRegistry",
    "heom_config",
    "solver_registry",
    "output_root",
    "worker_count",
    "SolveResult",
    "selected_solvers",
    "simulate",
    "solve",
    "configure_point",
    "run_points",
    "sweep",
    "hash_from_dict",
    "run_id",
]
