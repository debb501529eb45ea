"""Run records."""

from datetime import datetime
from typing import Any, Self

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..core import PopulationTrace
from ..types import FloatArray, Knob, SolverTag

TRACE_HEADER = ("t", "P")


def point_label(knob: Knob | str, value: float) -> str:
    """
    Label of one sweep point, exact to the last bit of `value`.

    Examples
    --------
    >>> point_label("lambda", 0.1)
    'lambda=0.1'
    >>> point_label("alpha", 0.2500001)
    'alpha=0.2500001'
    """
    return f"{knob}={float(value)!r}"


class Curve(BaseModel):
    """
    One output curve of a run, written as one CSV file.

    Attributes
    ----------
    solver
        Producer of the curve: a solver tag, or a series name.
    knob
        Swept parameter labelling the curve.
    value
        Knob value.
    header
        Column names.
    x, y
        Column values.
    params
        Parameter echo of the producer.
    """

    model_config = ConfigDict(frozen=True)

    solver: str
    knob: Knob
    value: float
    header: tuple[str, str] = TRACE_HEADER
    x: tuple[float, ...]
    y: tuple[float, ...]
    params: dict[str, Any] = Field(default_factory=dict)

    @model_validator(mode="after")
    def _check_lengths(self) -> Self:
        if len(self.x) != len(self.y):
            msg = "x and y must have the same length"
            raise ValueError(msg)
        return self

    @classmethod
    def from_trace(cls, trace: PopulationTrace, knob: Knob, value: float) -> Self:
        """Wrap a population trace."""
        return cls(
            solver=str(trace.solver_tag),
            knob=knob,
            value=value,
            x=trace.times,
            y=trace.values,
            params=trace.params,
        )

    def file_name(self, run_id: str) -> str:
        """
        CSV file name of the curve.

        Examples
        --------
        >>> curve = Curve(solver="laplace", knob="lambda", value=0.1, x=(), y=())
        >>> curve.file_name("abc")
        'abc_laplace_lambda=0.1.csv'
        """
        return f"{run_id}_{self.solver}_{point_label(self.knob, self.value)}.csv"

    def trace(self) -> PopulationTrace:
        """Population trace held by the curve."""
        if self.header != TRACE_HEADER:
            msg = f"Curve with columns {self.header} is not a population trace"
            raise ValueError(msg)
        return PopulationTrace(
            times=self.x,
            values=self.y,
            solver_tag=SolverTag(self.solver),
            params=self.params,
        )

    def columns(self) -> FloatArray:
        """Curve as an (n, 2) array."""
        return np.column_stack([self.x, self.y])


class RunRecord(BaseModel):
    """
    Persisted description of a run.

    Attributes
    ----------
    run_id
        Content-addressed identifier.
    kind
        "simulate", "sweep" or "preset:<name>".
    timestamp
        Start time.
    version
        Software version.
    config
        Fully resolved configuration.
    sweep
        Swept knob and values, if any.
    curves
        Output curves in file order.
    diagnostics
        Solver and convergence diagnostics.
    duration
        Wall-clock duration in seconds.
    """

    model_config = ConfigDict(frozen=True)

    run_id: str
    kind: str
    timestamp: datetime
    version: str
    config: dict[str, Any]
    sweep: dict[str, Any] | None = None
    curves: list[Curve] = Field(default_factory=list)
    diagnostics: dict[str, Any] = Field(default_factory=dict)
    duration: float = Field(ge=0)

    def curve(self, solver: str, value: float) -> Curve:
        """Look up a curve by producer and knob value."""
        for curve in self.curves:
            if curve.solver == solver and curve.value == value:
                return curve
        msg = f"No {solver} curve at value {value!r}"
        raise KeyError(msg)
