"""Solver registry."""

from collections.abc import Callable
from typing import Any, NamedTuple

import numpy as np

from ..core import DriveMod, HOMod, NoMod, PopulationTrace, ReservoirMod
from ..heom import (
    ConvergenceReport,
    HeomConfig,
    converge_hierarchy,
    convergence_check,
    heom_evolve,
    initial_state,
)
from ..laplace import kernel_for, population_trace_laplace
from ..modulation import driven_bath
from ..polaron import closed_form_trace, expsum_for, volterra_solve
from ..types import SolverTag
from .config import ScenarioConfig


class SolverOutput(NamedTuple):
    """Trace and diagnostics of one solver."""

    trace: PopulationTrace
    diagnostics: dict[str, Any]


SolverFunc = Callable[[ScenarioConfig], SolverOutput]
Predicate = Callable[[ScenarioConfig], bool]


def _always(_: ScenarioConfig) -> bool:
    return True


class SolverRegistry:
    """Solver registry."""

    def __init__(self) -> None:
        """Initialize solver registry."""
        self._registry: dict[SolverTag, tuple[SolverFunc, Predicate]] = {}

    def register(
        self, tag: SolverTag, applies: Predicate = _always
    ) -> Callable[[SolverFunc], SolverFunc]:
        """Register solver under `tag` (decorator)."""

        def decorator(func: SolverFunc) -> SolverFunc:
            if tag in self._registry:
                msg = f"Solver '{tag}' is already registered"
                raise ValueError(msg)
            self._registry[tag] = (func, applies)
            return func

        return decorator

    def get(self, tag: SolverTag | str) -> SolverFunc:
        """Get registered solver by tag."""
        try:
            func, _ = self._registry[SolverTag(tag)]
        except (KeyError, ValueError) as err:
            msg = f"Unknown solver '{tag}'. Available: {sorted(self._registry)}"
            raise KeyError(msg) from err
        return func

    def applies(self, tag: SolverTag | str, config: ScenarioConfig) -> bool:
        """Whether the solver handles the scenario's modulator."""
        self.get(tag)
        _, predicate = self._registry[SolverTag(tag)]
        return predicate(config)

    def available(self) -> tuple[SolverTag, ...]:
        """Get registered solver tags."""
        return tuple(self._registry)


solver_registry = SolverRegistry()


def _bare_equivalent(config: ScenarioConfig) -> bool:
    match config.modulator:
        case NoMod() | DriveMod():
            return True
        case HOMod():
            return config.modulator.g0 == 0
        case ReservoirMod():
            return config.modulator.chi == 0
    return False


def _has_oscillator_or_none(config: ScenarioConfig) -> bool:
    return isinstance(config.modulator, NoMod | HOMod)


@solver_registry.register(SolverTag.laplace)
def solve_laplace(config: ScenarioConfig) -> SolverOutput:
    """Zakian inversion of the Laplace-domain solution."""
    kernel = kernel_for(config.modulator, config.bath, tol=config.tol, cap=config.cap)
    trace = population_trace_laplace(kernel, config.rho_ee0, config.grid)
    return SolverOutput(trace, {"n_terms": len(kernel.weights)})


@solver_registry.register(SolverTag.volterra)
def solve_volterra(config: ScenarioConfig) -> SolverOutput:
    """Auxiliary-variable RK4 solution of the master equation."""
    kernel = expsum_for(config.modulator, config.bath, tol=config.tol, cap=config.cap)
    trace = volterra_solve(kernel, config.rho_ee0, config.grid)
    return SolverOutput(
        trace, {"h": trace.params["h"], "halving_delta": trace.params["halving_delta"]}
    )


@solver_registry.register(SolverTag.closed_form, applies=_bare_equivalent)
def solve_closed_form(config: ScenarioConfig) -> SolverOutput:
    """Analytic trace of the unmodulated (or drive-renormalized) TLS."""
    bath = config.bath
    if isinstance(config.modulator, DriveMod):
        bath = driven_bath(bath, config.modulator)
    return SolverOutput(closed_form_trace(bath, config.rho_ee0, config.grid), {})


def heom_config(config: ScenarioConfig) -> HeomConfig:
    """Hierarchy configuration of a scenario."""
    settings = config.heom
    omega0, g0 = settings.omega0, 0.0
    if isinstance(config.modulator, HOMod):
        omega0, g0 = config.modulator.omega0, config.modulator.g0
    return HeomConfig(
        epsilon=config.epsilon,
        omega0=omega0,
        g0=g0,
        alpha=config.alpha,
        omega_c=config.omega_c,
        fock_dim=settings.fock_dim,
        ell_c=settings.ell_c,
        dt=settings.dt,
        exponent_order=settings.exponent_order,
    )


@solver_registry.register(SolverTag.heom, applies=_has_oscillator_or_none)
def solve_heom(config: ScenarioConfig) -> SolverOutput:
    """Hierarchy solution of the non-RWA TLS-oscillator model."""
    hconfig = heom_config(config)
    rho_tls = np.diag([config.rho_ee0, 1.0 - config.rho_ee0]).astype(complex)
    rho_sa0 = initial_state(hconfig, rho_tls)

    diagnostics: dict[str, Any] = {}
    report: ConvergenceReport | None = None
    if config.heom.convergence == "ladder":
        hconfig, report, result = converge_hierarchy(
            hconfig, rho_sa0, config.grid, ceiling=config.heom.ell_c_ceiling
        )
    else:
        result = heom_evolve(hconfig, rho_sa0, config.grid)
        if config.heom.convergence == "check":
            report = convergence_check(
                hconfig, rho_sa0, config.grid, base=result.trace
            )
    if report is not None:
        diagnostics["convergence"] = report.model_dump() | {
            "converged": report.converged
        }
    diagnostics |= result.diagnostics
    diagnostics |= {"ell_c": hconfig.ell_c, "fock_dim": hconfig.fock_dim}
    return SolverOutput(result.trace, diagnostics)
