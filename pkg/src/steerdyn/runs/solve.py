"""Scenario execution."""

import logging
import time
from datetime import UTC, datetime
from typing import Any, NamedTuple

from ..core import PopulationTrace
from ..errors import ScenarioError
from ..polaron import cross_check
from ..types import SolverChoice, SolverTag
from ..version import __version__
from .config import ScenarioConfig
from .record import Curve, RunRecord
from .registry import solver_registry
from .util import run_id

logger = logging.getLogger(__name__)

MASTER_EQUATION_SOLVERS = (SolverTag.laplace, SolverTag.volterra, SolverTag.closed_form)


class SolveResult(NamedTuple):
    """Traces and diagnostics of one scenario."""

    traces: dict[SolverTag, PopulationTrace]
    diagnostics: dict[str, Any]


def selected_solvers(config: ScenarioConfig) -> list[SolverTag]:
    """
    Solvers a scenario runs.

    "all" selects every master-equation solver that applies; the hierarchy
    solver runs only when requested by name.

    Raises
    ------
    ScenarioError
        If a named solver does not apply to the scenario's modulator.
    """
    if config.solver == SolverChoice.all:
        return [
            tag
            for tag in MASTER_EQUATION_SOLVERS
            if solver_registry.applies(tag, config)
        ]
    tag = SolverTag(config.solver)
    if not solver_registry.applies(tag, config):
        msg = f"solver '{tag}' does not apply to modulator '{config.modulator.kind}'"
        raise ScenarioError(msg)
    return [tag]


def solve(config: ScenarioConfig) -> SolveResult:
    """
    Run every selected solver on a scenario.

    Parameters
    ----------
    config
        Validated scenario.

    Returns
    -------
        Traces by solver, and diagnostics by solver. When both Laplace and
        Volterra traces exist their largest disagreement is recorded too.
    """
    traces: dict[SolverTag, PopulationTrace] = {}
    diagnostics: dict[str, Any] = {}
    for tag in selected_solvers(config):
        logger.debug("Running %s solver", tag)
        output = solver_registry.get(tag)(config)
        traces[tag] = output.trace
        diagnostics[str(tag)] = output.diagnostics
    if SolverTag.laplace in traces and SolverTag.volterra in traces:
        diagnostics["laplace_volterra_delta"] = cross_check(
            traces[SolverTag.laplace], traces[SolverTag.volterra]
        )
    return SolveResult(traces, diagnostics)


def resolved_config(config: ScenarioConfig) -> dict[str, Any]:
    """Configuration dump with every default filled in."""
    return config.model_dump(mode="json")


def simulate(config: ScenarioConfig) -> RunRecord:
    """
    Run one scenario into a record.

    Parameters
    ----------
    config
        Validated scenario.

    Returns
    -------
        Record with one curve per solver, labelled by the modulator's
        steering knob.
    """
    started = datetime.now(UTC)
    clock = time.perf_counter()
    result = solve(config)
    knob, value = config.natural_knob()
    curves = [Curve.from_trace(trace, knob, value) for trace in result.traces.values()]
    dumped = resolved_config(config)
    return RunRecord(
        run_id=run_id("simulate", dumped, __version__),
        kind="simulate",
        timestamp=started,
        version=__version__,
        config=dumped,
        curves=curves,
        diagnostics=result.diagnostics,
        duration=time.perf_counter() - clock,
    )
