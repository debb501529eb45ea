"""Time-domain solution of the polaron master equation."""

import logging
import math

import numpy as np

from ..core import PopulationTrace, TimeGrid
from ..errors import StepTooCoarseError
from ..types import FloatArray, SolverTag
from .kernel import ExpSumKernel

logger = logging.getLogger(__name__)

HALVING_TOL = 1e-6


def generator(kernel: ExpSumKernel) -> FloatArray:
    """
    Generator of the auxiliary-variable system.

    The state is x = [rho_ee, Re y_1..y_M, Im y_1..y_M] with
    y_m' = rho_ee - rate_m*y_m and rho_ee' = -2 * sum_m weight_m * Re y_m.
    """
    n_terms = len(kernel.weights)
    re = np.arange(1, n_terms + 1)
    im = re + n_terms
    decay = np.asarray(kernel.decay)
    freq = np.asarray(kernel.frequency)

    gen = np.zeros((2 * n_terms + 1, 2 * n_terms + 1))
    gen[0, re] = -2.0 * np.asarray(kernel.weights)
    gen[re, 0] = 1.0
    gen[re, re] = -decay
    gen[re, im] = freq
    gen[im, re] = -freq
    gen[im, im] = -decay
    return gen


def rk4_step_matrix(gen: FloatArray, h: float) -> FloatArray:
    """One classical RK4 step of x' = gen @ x, as a matrix."""
    ha = h * gen
    ha2 = ha @ ha
    ha3 = ha2 @ ha
    return np.eye(gen.shape[0]) + ha + ha2 / 2.0 + ha3 / 6.0 + ha3 @ ha / 24.0


def default_step(kernel: ExpSumKernel, grid: TimeGrid) -> float:
    """Integrator step resolving the fastest kernel rate."""
    fastest = max(float(np.max(np.abs(kernel.rates()))), 1.0)
    return min(grid.step, 0.01 / fastest)


def _propagate(
    gen: FloatArray, rho_ee0: float, grid: TimeGrid, h: float
) -> FloatArray:
    n_sub = math.ceil(grid.step / h - 1e-9)
    step = np.linalg.matrix_power(rk4_step_matrix(gen, grid.step / n_sub), n_sub)

    state = np.zeros(gen.shape[0])
    state[0] = rho_ee0
    if grid.t_start > 0:
        n_lead = math.ceil(grid.t_start / h - 1e-9)
        lead = rk4_step_matrix(gen, grid.t_start / n_lead)
        state = np.linalg.matrix_power(lead, n_lead) @ state

    rho_ee = np.empty(grid.n_points)
    rho_ee[0] = state[0]
    for idx in range(1, grid.n_points):
        state = step @ state
        rho_ee[idx] = state[0]
    logger.debug("Volterra step %g with %d substeps per sample", grid.step / n_sub, n_sub)
    return rho_ee


def volterra_solve(
    kernel: ExpSumKernel,
    rho_ee0: float,
    grid: TimeGrid,
    h: float | None = None,
) -> PopulationTrace:
    """
    Solve rho_ee' = -int_0^t k(s) rho_ee(t - s) ds on a grid.

    The convolution is replaced exactly by one auxiliary variable per kernel
    term; the resulting linear system is integrated by classical RK4 with
    substeps that land on every grid point.

    Parameters
    ----------
    kernel
        Exponential-sum memory kernel.
    rho_ee0
        Initial excited-state population at t = 0.
    grid
        Sampling grid.
    h, optional
        Maximum integrator step; defaults to `default_step`.

    Returns
    -------
        Trace tagged volterra.

    Raises
    ------
    StepTooCoarseError
        If halving the step changes any sample by more than 1e-6.
    """
    if not 0 <= rho_ee0 <= 1:
        msg = "rho_ee0 must lie in [0, 1]"
        raise ValueError(msg)
    h = default_step(kernel, grid) if h is None else h
    if not h > 0:
        msg = "h must be positive"
        raise ValueError(msg)

    gen = generator(kernel)
    rho_ee = _propagate(gen, rho_ee0, grid, h)
    rho_ee_half = _propagate(gen, rho_ee0, grid, h / 2)
    delta = float(np.max(np.abs(2.0 * (rho_ee - rho_ee_half))))
    if delta > HALVING_TOL:
        msg = f"step too coarse: halving h={h:g} changes P(t) by {delta:.3g}"
        raise StepTooCoarseError(msg)

    params = {**kernel.params, "family": str(kernel.family), "rho_ee0": rho_ee0}
    params |= {"h": h, "halving_delta": delta}
    return PopulationTrace.from_arrays(
        grid.times(), 2.0 * rho_ee - 1.0, SolverTag.volterra, params
    )
