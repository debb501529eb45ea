"""Sampled population-difference traces."""

from typing import Any

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..types import FloatArray, SolverTag


class PopulationTrace(BaseModel):
    """
    Population difference P(t) sampled on a time grid.

    Attributes
    ----------
    times
        Sample times.
    values
        P(t) at each sample time.
    solver_tag
        Solver that produced the trace.
    params
        Echo of every parameter the solver used.
    """

    model_config = ConfigDict(frozen=True)

    times: tuple[float, ...]
    values: tuple[float, ...]
    solver_tag: SolverTag
    params: dict[str, Any] = Field(default_factory=dict)

    @model_validator(mode="after")
    def _check_lengths(self) -> "PopulationTrace":
        if len(self.times) != len(self.values):
            msg = "times and values must have the same length"
            raise ValueError(msg)
        return self

    @classmethod
    def from_arrays(
        cls,
        times: FloatArray,
        values: FloatArray,
        solver_tag: SolverTag,
        params: dict[str, Any] | None = None,
    ) -> "PopulationTrace":
        """Build a trace from NumPy arrays."""
        return cls(
            times=tuple(np.asarray(times, dtype=float).tolist()),
            values=tuple(np.asarray(values, dtype=float).tolist()),
            solver_tag=solver_tag,
            params=params or {},
        )

    def t(self) -> FloatArray:
        """Sample times as an array."""
        return np.asarray(self.times)

    def p(self) -> FloatArray:
        """P(t) values as an array."""
        return np.asarray(self.values)

    def within_bounds(self, tol: float = 1e-6) -> bool:
        """Whether every value lies in [-1 - tol, 1 + tol]."""
        return bool(np.all(np.abs(self.p()) <= 1 + tol))


def max_deviation(trace1: PopulationTrace, trace2: PopulationTrace) -> float:
    """
    Largest pointwise difference between two traces on the same grid.

    Parameters
    ----------
    trace1, trace2
        Traces sampled at the same times.

    Returns
    -------
        max |P1(t) - P2(t)|.

    Raises
    ------
    ValueError
        If the traces are sampled at different times.
    """
    if not np.allclose(trace1.t(), trace2.t(), rtol=0, atol=1e-12):
        msg = "traces are sampled at different times"
        raise ValueError(msg)
    return float(np.max(np.abs(trace1.p() - trace2.p())))
