"""Figure presets."""

import logging
import time
from collections.abc import Callable
from datetime import UTC, datetime
from typing import Any

import numpy as np

from ..core import HOMod, LorentzBath, ReservoirMod, TimeGrid
from ..errors import UnknownPresetError
from ..polaron import exp_approx_trace, rate_curve, relaxation_time
from ..types import Knob, SolverChoice
from ..version import __version__
from .config import HeomSettings, ScenarioConfig
from .record import Curve, RunRecord, point_label
from .solve import resolved_config
from .sweep import sweep_curves
from .util import run_id

logger = logging.getLogger(__name__)

PresetResult = tuple[ScenarioConfig, dict[str, Any], list[Curve], dict[str, Any]]
PresetFunc = Callable[[int | None], PresetResult]

PRESETS: dict[str, PresetFunc] = {}

LAMBDAS = (0.0, 0.1, 1.0, 2.0, 3.0)
FIG1_OMEGA0 = 5.0
FIG2_ALPHAS = (0.1, 0.2, 0.3)
FIG2_LAMBDA_GRID = (0.0, 3.0, 121)
FIG4_LAMBDAS = (0.0, 0.1, 0.2, 0.3)
FIG4_GRID = TimeGrid(t_start=0.0, t_end=50.0, n_points=501)


def preset(name: str) -> Callable[[PresetFunc], PresetFunc]:
    """Register a preset (decorator)."""

    def decorator(func: PresetFunc) -> PresetFunc:
        PRESETS[name] = func
        return func

    return decorator


def _sweep_spec(knob: Knob, values: tuple[float, ...]) -> dict[str, Any]:
    return {"knob": str(knob), "values": list(values)}


@preset("fig1")
def fig1(workers: int | None = None) -> PresetResult:
    """Oscillator-modulated decay with exponential overlays."""
    config = ScenarioConfig(
        alpha=0.25,
        omega_c=7.5,
        epsilon=1.0,
        modulator=HOMod(g0=0.0, omega0=FIG1_OMEGA0),
        solver=SolverChoice.laplace,
    )
    curves, diagnostics = sweep_curves(config, Knob.ho_lambda, LAMBDAS, workers)
    for lam in LAMBDAS:
        t1 = relaxation_time(
            config.bath, lam, FIG1_OMEGA0, tol=config.tol, cap=config.cap
        )
        overlay = exp_approx_trace(t1, config.grid)
        curves.append(Curve.from_trace(overlay, Knob.ho_lambda, lam))
        diagnostics[point_label(Knob.ho_lambda, lam)]["T1"] = t1
    return config, _sweep_spec(Knob.ho_lambda, LAMBDAS), curves, diagnostics


@preset("fig2")
def fig2(workers: int | None = None) -> PresetResult:  # noqa: ARG001
    """Relaxation time against the steering parameter."""
    omega0 = FIG1_OMEGA0
    config = ScenarioConfig(
        alpha=FIG2_ALPHAS[0],
        omega_c=7.5,
        epsilon=1.0,
        modulator=HOMod(g0=0.0, omega0=omega0),
    )
    lams = np.linspace(*FIG2_LAMBDA_GRID)
    curves = []
    for alpha in FIG2_ALPHAS:
        bath = LorentzBath(alpha=alpha, omega_c=config.omega_c, epsilon=config.epsilon)
        t1 = rate_curve(bath, lams, omega0, tol=config.tol, cap=config.cap)
        curves.append(
            Curve(
                solver="relaxation_time",
                knob=Knob.alpha,
                value=alpha,
                header=("lambda", "T1"),
                x=tuple(lams.tolist()),
                y=tuple(t1.tolist()),
                params={"alpha": alpha, "omega_c": config.omega_c, "omega0": omega0},
            )
        )
    spec = _sweep_spec(Knob.alpha, FIG2_ALPHAS)
    spec["lambda_grid"] = list(FIG2_LAMBDA_GRID)
    return config, spec, curves, {}


@preset("fig3")
def fig3(workers: int | None = None) -> PresetResult:
    """Reservoir-modulated decay."""
    config = ScenarioConfig(
        alpha=0.2,
        omega_c=5.0,
        epsilon=1.0,
        modulator=ReservoirMod(chi=0.0, eta=3.0),
        solver=SolverChoice.laplace,
    )
    curves, diagnostics = sweep_curves(config, Knob.reservoir_lambda, LAMBDAS, workers)
    return config, _sweep_spec(Knob.reservoir_lambda, LAMBDAS), curves, diagnostics


@preset("fig4")
def fig4(workers: int | None = None) -> PresetResult:
    """Hierarchy dynamics of the oscillator-modulated TLS."""
    config = ScenarioConfig(
        alpha=0.01,
        omega_c=0.2,
        epsilon=1.5,
        modulator=HOMod(g0=0.0, omega0=1.0),
        solver=SolverChoice.heom,
        grid=FIG4_GRID,
        heom=HeomSettings(fock_dim=10, ell_c=8, omega0=1.0),
    )
    curves, diagnostics = sweep_curves(config, Knob.ho_lambda, FIG4_LAMBDAS, workers)
    return config, _sweep_spec(Knob.ho_lambda, FIG4_LAMBDAS), curves, diagnostics


def preset_record(name: str, workers: int | None = None) -> RunRecord:
    """
    Run a figure preset into a record.

    Parameters
    ----------
    name
        One of "fig1", "fig2", "fig3", "fig4".
    workers, optional
        Worker processes for the sweep.

    Returns
    -------
        Record of every curve of the figure.

    Raises
    ------
    UnknownPresetError
        If `name` is not a preset.
    """
    if name not in PRESETS:
        msg = f"unknown preset: {name!r}. Available: {sorted(PRESETS)}"
        raise UnknownPresetError(msg)
    started = datetime.now(UTC)
    clock = time.perf_counter()
    logger.info("Running preset %s", name)
    config, spec, curves, diagnostics = PRESETS[name](workers)
    dumped = resolved_config(config)
    kind = f"preset:{name}"
    return RunRecord(
        run_id=run_id(kind, dumped, __version__, sweep=spec),
        kind=kind,
        timestamp=started,
        version=__version__,
        config=dumped,
        sweep=spec,
        curves=curves,
        diagnostics=diagnostics,
        duration=time.perf_counter() - clock,
    )
