"""Hierarchy time evolution and truncation checks."""

import logging
import math
from typing import Any, NamedTuple

import numpy as np
from pydantic import BaseModel, ConfigDict

from ..core import PopulationTrace, TimeGrid, max_deviation
from ..errors import DriftError
from ..types import ComplexArray, SolverTag
from .config import HeomConfig
from .hamiltonian import SIGMA_Z
from .hierarchy import Hierarchy, HierarchyState

logger = logging.getLogger(__name__)

DRIFT_TOL = 1e-6
CONVERGENCE_TOL = 1e-4
ELL_C_CEILING = 30


class HeomResult(NamedTuple):
    """Output of `heom_evolve`."""

    trace: PopulationTrace
    reduced_states: ComplexArray
    diagnostics: dict[str, Any]
    final: HierarchyState


class ConvergenceReport(BaseModel):
    """
    Truncation sensitivity of a hierarchy run.

    Attributes
    ----------
    ell_c
        Hierarchy depth checked.
    fock_dim
        Oscillator truncation checked.
    delta_ell_c
        max |dP(t)| when the depth is raised by two.
    delta_fock_dim
        max |dP(t)| when the Fock space is enlarged by two.
    tol
        Convergence threshold.
    """

    model_config = ConfigDict(frozen=True)

    ell_c: int
    fock_dim: int
    delta_ell_c: float
    delta_fock_dim: float
    tol: float = CONVERGENCE_TOL

    @property
    def converged(self) -> bool:
        """Whether both deltas are below the threshold."""
        return self.delta_ell_c < self.tol and self.delta_fock_dim < self.tol


def weak_coupling_alpha(config: HeomConfig) -> float:
    """
    Master-equation coupling equivalent to the hierarchy at weak coupling.

    The hierarchy couplings carry alpha/8 per anticommutator and commutator
    term, which amounts to a quarter of the master-equation coupling.
    """
    return config.alpha / 4.0


def initial_state(config: HeomConfig, rho_tls: ComplexArray | None = None) -> ComplexArray:
    """
    TLS state tensored with the oscillator vacuum.

    Parameters
    ----------
    config
        Hierarchy configuration.
    rho_tls, optional
        2x2 TLS density matrix in the (|e>, |g>) basis; defaults to |e><e|.

    Returns
    -------
        Joint density matrix.
    """
    if rho_tls is None:
        rho_tls = np.array([[1.0, 0.0], [0.0, 0.0]], dtype=complex)
    vacuum = np.zeros((config.fock_dim, config.fock_dim), dtype=complex)
    vacuum[0, 0] = 1.0
    return np.kron(np.asarray(rho_tls, dtype=complex), vacuum)


def embed_state(rho_sa: ComplexArray, fock_dim: int) -> ComplexArray:
    """Embed a joint density matrix into a larger Fock space."""
    old = rho_sa.shape[0] // 2
    if fock_dim < old:
        msg = "cannot embed into a smaller Fock space"
        raise ValueError(msg)
    blocks = np.zeros((2, fock_dim, 2, fock_dim), dtype=complex)
    blocks[:, :old, :, :old] = rho_sa.reshape(2, old, 2, old)
    return blocks.reshape(2 * fock_dim, 2 * fock_dim)


def reduced_state(rho_sa: ComplexArray, fock_dim: int) -> ComplexArray:
    """Partial trace over the oscillator."""
    return rho_sa.reshape(2, fock_dim, 2, fock_dim).trace(axis1=1, axis2=3)


def _check_initial(rho_sa0: ComplexArray, dim: int) -> None:
    if rho_sa0.shape != (dim, dim):
        msg = f"initial state must have shape ({dim}, {dim})"
        raise ValueError(msg)
    if abs(np.trace(rho_sa0) - 1.0) > DRIFT_TOL:
        msg = "initial state must have unit trace"
        raise ValueError(msg)
    if not np.allclose(rho_sa0, rho_sa0.conj().T, atol=1e-12):
        msg = "initial state must be Hermitian"
        raise ValueError(msg)
    if np.min(np.linalg.eigvalsh(rho_sa0)) < -1e-10:  # noqa: PLR2004
        msg = "initial state must be positive semidefinite"
        raise ValueError(msg)


def heom_evolve(
    config: HeomConfig, rho_sa0: ComplexArray, grid: TimeGrid
) -> HeomResult:
    """
    Integrate the hierarchy with fixed-step RK4.

    The step is `config.resolved_dt`, shortened so that a whole number of
    steps fits between grid points.

    Parameters
    ----------
    config
        Hierarchy configuration.
    rho_sa0
        Joint TLS-oscillator density matrix at t = 0.
    grid
        Sampling grid.

    Returns
    -------
        Population trace, reduced TLS states at the grid points, and
        diagnostics (largest trace drift and hermiticity residual) and the
        final hierarchy state.

    Raises
    ------
    DriftError
        If Tr rho_(0,0) leaves 1 or the adjoint pairing breaks by more
        than 1e-6.
    """
    rho_sa0 = np.asarray(rho_sa0, dtype=complex)
    _check_initial(rho_sa0, config.dim)
    hierarchy = Hierarchy(config)
    generator = hierarchy.generator
    ados = np.zeros((hierarchy.n_ados, config.dim, config.dim), dtype=complex)
    ados[0] = rho_sa0
    state = hierarchy.flatten(ados)

    dt = config.resolved_dt
    n_sub = math.ceil(grid.step / dt - 1e-9)
    h = grid.step / n_sub
    max_drift = 0.0
    max_residual = 0.0

    def advance(state: ComplexArray, h: float, n_steps: int) -> ComplexArray:
        nonlocal max_drift
        for _ in range(n_steps):
            k1 = generator @ state
            k2 = generator @ (state + 0.5 * h * k1)
            k3 = generator @ (state + 0.5 * h * k2)
            k4 = generator @ (state + h * k3)
            state = state + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
            drift = hierarchy.trace_drift(state)
            max_drift = max(max_drift, drift)
            if drift > DRIFT_TOL:
                msg = f"trace drift: |Tr rho - 1| = {drift:.3g}"
                raise DriftError(msg)
        return state

    if grid.t_start > 0:
        n_lead = math.ceil(grid.t_start / dt - 1e-9)
        state = advance(state, grid.t_start / n_lead, n_lead)

    sz = np.kron(SIGMA_Z, np.eye(config.fock_dim))
    reduced = np.empty((grid.n_points, 2, 2), dtype=complex)
    values = np.empty(grid.n_points)
    for idx in range(grid.n_points):
        if idx > 0:
            state = advance(state, h, n_sub)
        residual = hierarchy.hermiticity_residual(state)
        max_residual = max(max_residual, residual)
        if residual > DRIFT_TOL:
            msg = f"hermiticity drift: adjoint-pairing residual {residual:.3g}"
            raise DriftError(msg)
        rho = hierarchy.unflatten(state)[0]
        reduced[idx] = reduced_state(rho, config.fock_dim)
        values[idx] = float(np.real(np.trace(sz @ rho)))

    logger.debug(
        "HEOM run with %d ADOs, dim %d, %d generator entries, step %g "
        "(%d substeps per sample)",
        hierarchy.n_ados,
        config.dim,
        generator.nnz,
        h,
        n_sub,
    )
    params = config.model_dump() | {"dt": dt, "lam": config.lam}
    trace = PopulationTrace.from_arrays(grid.times(), values, SolverTag.heom, params)
    diagnostics = {
        "max_trace_drift": max_drift,
        "max_hermiticity_residual": max_residual,
        "step": h,
    }
    final = HierarchyState(ados=hierarchy.unflatten(state).copy(), time=grid.t_end)
    return HeomResult(trace, reduced, diagnostics, final)


def _compare(
    config: HeomConfig,
    rho_sa0: ComplexArray,
    grid: TimeGrid,
    base: PopulationTrace,
) -> tuple[ConvergenceReport, HeomResult]:
    deeper = config.model_copy(update={"ell_c": config.ell_c + 2})
    wider = config.model_copy(update={"fock_dim": config.fock_dim + 2})
    deeper_result = heom_evolve(deeper, rho_sa0, grid)
    wider_trace = heom_evolve(
        wider, embed_state(rho_sa0, wider.fock_dim), grid
    ).trace

    report = ConvergenceReport(
        ell_c=config.ell_c,
        fock_dim=config.fock_dim,
        delta_ell_c=max_deviation(base, deeper_result.trace),
        delta_fock_dim=max_deviation(base, wider_trace),
    )
    if not report.converged:
        logger.warning(
            "HEOM not converged at ell_c=%d, fock_dim=%d: deltas %.3g, %.3g",
            report.ell_c,
            report.fock_dim,
            report.delta_ell_c,
            report.delta_fock_dim,
        )
    return report, deeper_result


def convergence_check(
    config: HeomConfig,
    rho_sa0: ComplexArray,
    grid: TimeGrid,
    base: PopulationTrace | None = None,
) -> ConvergenceReport:
    """
    Compare a run against runs with deeper truncations.

    The hierarchy depth and the Fock space are each raised by two, with the
    integrator step held at the base run's step.

    Parameters
    ----------
    config
        Hierarchy configuration under test.
    rho_sa0
        Joint initial state for `config`.
    grid
        Sampling grid.
    base, optional
        Trace already computed for `config`.

    Returns
    -------
        Report of both deltas; non-convergence is logged, not raised.
    """
    rho_sa0 = np.asarray(rho_sa0, dtype=complex)
    pinned = config.model_copy(update={"dt": config.resolved_dt})
    if base is None:
        base = heom_evolve(pinned, rho_sa0, grid).trace
    report, _ = _compare(pinned, rho_sa0, grid, base)
    return report


def converge_hierarchy(
    config: HeomConfig,
    rho_sa0: ComplexArray,
    grid: TimeGrid,
    ceiling: int = ELL_C_CEILING,
) -> tuple[HeomConfig, ConvergenceReport, HeomResult]:
    """
    Raise the hierarchy depth in steps of two until the run converges.

    Each rung's deeper run becomes the next rung's base run.

    Parameters
    ----------
    config
        Starting configuration.
    rho_sa0
        Joint initial state.
    grid
        Sampling grid.
    ceiling
        Largest depth tried.

    Returns
    -------
        Last configuration tried, its convergence report and its run.
    """
    rho_sa0 = np.asarray(rho_sa0, dtype=complex)
    config = config.model_copy(update={"dt": config.resolved_dt})
    result = heom_evolve(config, rho_sa0, grid)
    report, deeper = _compare(config, rho_sa0, grid, result.trace)
    while not report.converged and config.ell_c + 2 <= ceiling:
        config = config.model_copy(update={"ell_c": config.ell_c + 2})
        logger.info("Raising hierarchy depth to %d", config.ell_c)
        result = deeper
        report, deeper = _compare(config, rho_sa0, grid, result.trace)
    return config, report, result
