"""Parameter sweeps."""

import itertools
import logging
import math
import time
from collections.abc import Iterable, Sequence
from concurrent.futures import ProcessPoolExecutor
from datetime import UTC, datetime
from typing import Any

from ..core import HOMod, ReservoirMod
from ..errors import KnobError
from ..types import Knob
from ..version import __version__
from .config import ScenarioConfig
from .record import Curve, RunRecord, point_label
from .settings import worker_count
from .solve import SolveResult, resolved_config, solve
from .util import run_id

logger = logging.getLogger(__name__)


def configure_point(config: ScenarioConfig, knob: Knob | str, value: float) -> ScenarioConfig:
    """
    Scenario with one knob set to `value`.

    Raises
    ------
    KnobError
        If the knob does not act on the scenario's modulator.
    """
    knob = Knob(knob)
    data = config.model_dump()
    match knob:
        case Knob.ho_lambda:
            if not isinstance(config.modulator, HOMod):
                msg = "knob requires single-mode modulator"
                raise KnobError(msg)
            omega0 = config.modulator.omega0
            data["modulator"] = {"kind": "ho", "omega0": omega0, "lam": value}
        case Knob.reservoir_lambda:
            if not isinstance(config.modulator, ReservoirMod):
                msg = "knob requires reservoir modulator"
                raise KnobError(msg)
            eta = config.modulator.eta
            data["modulator"] = {"kind": "reservoir", "eta": eta, "Lam": value}
        case Knob.alpha:
            data["alpha"] = value
    return ScenarioConfig.model_validate(data)


def run_points(
    configs: Sequence[ScenarioConfig], workers: int | None = None
) -> list[SolveResult]:
    """
    Solve independent scenarios, in input order.

    Parameters
    ----------
    configs
        Scenarios to solve.
    workers, optional
        Worker processes; defaults to `worker_count()`. With one worker, or
        one scenario, everything runs in this process.

    Returns
    -------
        One result per scenario.
    """
    workers = worker_count() if workers is None else workers
    workers = min(workers, len(configs))
    if workers <= 1:
        return [solve(config) for config in configs]
    logger.info("Solving %d points on %d workers", len(configs), workers)
    with ProcessPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(solve, configs))


def sorted_values(values: Iterable[float]) -> list[float]:
    """
    Sweep values in ascending order.

    Raises
    ------
    KnobError
        If there are no values, a value is not finite or a value repeats.
    """
    values = sorted(float(value) for value in values)
    if not values:
        msg = "empty sweep"
        raise KnobError(msg)
    if not all(math.isfinite(value) for value in values):
        msg = "sweep values must be finite"
        raise KnobError(msg)
    repeated = sorted({a for a, b in itertools.pairwise(values) if a == b})
    if repeated:
        msg = f"sweep values repeat: {repeated}"
        raise KnobError(msg)
    return values


def sweep_curves(
    config: ScenarioConfig,
    knob: Knob | str,
    values: Iterable[float],
    workers: int | None = None,
) -> tuple[list[Curve], dict[str, Any]]:
    """Curves and per-point diagnostics of a sweep."""
    knob = Knob(knob)
    values = sorted_values(values)
    configs = [configure_point(config, knob, value) for value in values]
    results = run_points(configs, workers=workers)

    curves: list[Curve] = []
    diagnostics: dict[str, Any] = {}
    for value, result in zip(values, results, strict=True):
        curves.extend(
            Curve.from_trace(trace, knob, value) for trace in result.traces.values()
        )
        diagnostics[point_label(knob, value)] = result.diagnostics
    return curves, diagnostics


def sweep(
    config: ScenarioConfig,
    knob: Knob | str,
    values: Iterable[float],
    workers: int | None = None,
) -> RunRecord:
    """
    Run a scenario once per knob value.

    Parameters
    ----------
    config
        Base scenario.
    knob
        Knob to sweep: "lambda", "Lambda" or "alpha".
    values
        Knob values; output is ordered by value.
    workers, optional
        Worker processes.

    Returns
    -------
        Record with one curve per solver and value.

    Raises
    ------
    KnobError
        On an empty sweep or a knob that does not act on the modulator.
    """
    started = datetime.now(UTC)
    clock = time.perf_counter()
    knob = Knob(knob)
    values = sorted_values(values)
    curves, diagnostics = sweep_curves(config, knob, values, workers=workers)
    dumped = resolved_config(config)
    spec = {"knob": str(knob), "values": values}
    logger.info("Sweep over %s finished with %d curves", knob, len(curves))
    return RunRecord(
        run_id=run_id("sweep", dumped, __version__, sweep=spec),
        kind="sweep",
        timestamp=started,
        version=__version__,
        config=dumped,
        sweep=spec,
        curves=curves,
        diagnostics=diagnostics,
        duration=time.perf_counter() - clock,
    )
