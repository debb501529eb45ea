"""Population traces from Laplace-domain kernels."""

import logging

import numpy as np

from ..core import PopulationTrace, TimeGrid
from ..types import SolverTag
from .kernel import LaplaceKernel, resolvent
from .zakian import zakian_invert

logger = logging.getLogger(__name__)


def population_trace_laplace(
    kernel: LaplaceKernel, rho_ee0: float, grid: TimeGrid
) -> PopulationTrace:
    """
    Population difference P(t) = 2*rho_ee(t) - 1 by Zakian inversion.

    The t = 0 sample is set to 2*rho_ee0 - 1 directly.

    Parameters
    ----------
    kernel
        Memory kernel mu(z).
    rho_ee0
        Initial excited-state population.
    grid
        Sampling grid.

    Returns
    -------
        Trace tagged laplace.
    """
    if not 0 <= rho_ee0 <= 1:
        msg = "rho_ee0 must lie in [0, 1]"
        raise ValueError(msg)
    times = grid.times()
    values = np.full(times.shape, 2.0 * rho_ee0 - 1.0)
    positive = times > 0
    if np.any(positive):
        rho_ee = zakian_invert(resolvent(kernel, rho_ee0), times[positive])
        values[positive] = 2.0 * np.asarray(rho_ee) - 1.0
    logger.debug("Inverted %d samples for %s kernel", positive.sum(), kernel.family)
    params = {**kernel.params, "family": str(kernel.family), "rho_ee0": rho_ee0}
    return PopulationTrace.from_arrays(times, values, SolverTag.laplace, params)
