"""Poisson-weighted series shared by every modulation kernel."""

import logging
import math

import numpy as np
from scipy.special import gammainc

from ..errors import SeriesCapExceededError
from ..types import FloatArray

logger = logging.getLogger(__name__)

DEFAULT_TOL = 1e-12
DEFAULT_CAP = 512


def series_length(lam: float, tol: float = DEFAULT_TOL, cap: int = DEFAULT_CAP) -> int:
    """
    Number of Poisson terms needed to bring the tail mass below `tol`.

    Parameters
    ----------
    lam
        Poisson mean.
    tol
        Tail-mass tolerance.
    cap
        Largest admissible last index.

    Returns
    -------
        L + 1, where L is the smallest index whose tail mass is below `tol`.

    Raises
    ------
    SeriesCapExceededError
        If L would exceed `cap`.
    """
    if not lam >= 0:
        msg = "lam must be non-negative"
        raise ValueError(msg)
    if not 0 < tol < 1:
        msg = "tol must lie in (0, 1)"
        raise ValueError(msg)
    if lam == 0:
        return 1
    # Tail mass beyond index l is the regularized lower incomplete gamma P(l+1, lam)
    tails = gammainc(np.arange(1, cap + 2), lam)
    (below,) = np.nonzero(tails < tol)
    if below.size == 0:
        msg = f"series cap exceeded: lam={lam} needs more than {cap} terms"
        raise SeriesCapExceededError(msg)
    return int(below[0]) + 1


def poisson_weight_array(
    lam: float, tol: float = DEFAULT_TOL, cap: int = DEFAULT_CAP
) -> FloatArray:
    """
    Truncated Poisson weights exp(-lam) lam**l / l! as an array.

    Parameters
    ----------
    lam
        Poisson mean.
    tol
        Tail-mass tolerance.
    cap
        Largest admissible last index.

    Returns
    -------
        Weights w_0, ..., w_L.
    """
    n_terms = series_length(lam, tol=tol, cap=cap)
    weights = np.empty(n_terms)
    weights[0] = math.exp(-lam)
    for idx in range(1, n_terms):
        weights[idx] = weights[idx - 1] * lam / idx
    logger.debug("Poisson series for lam=%g truncated at L=%d", lam, n_terms - 1)
    return weights


def poisson_weights(
    lam: float, tol: float = DEFAULT_TOL, cap: int = DEFAULT_CAP
) -> list[tuple[int, float]]:
    """
    Truncated Poisson weights as (index, weight) pairs.

    Examples
    --------
    >>> poisson_weights(0.0)
    [(0, 1.0)]
    """
    weights = poisson_weight_array(lam, tol=tol, cap=cap)
    return list(enumerate(weights.tolist()))
