"""Uniform time grids."""

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..types import FloatArray


class TimeGrid(BaseModel):
    """
    Uniform sampling grid.

    Attributes
    ----------
    t_start
        First sample time.
    t_end
        Last sample time.
    n_points
        Number of samples, including both end points.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    t_start: float = Field(default=0.0, ge=0)
    t_end: float
    n_points: int = Field(ge=2)

    @model_validator(mode="after")
    def _check_span(self) -> "TimeGrid":
        if not self.t_end > self.t_start:
            msg = "t_end must be greater than t_start"
            raise ValueError(msg)
        return self

    @property
    def step(self) -> float:
        """Grid spacing."""
        return (self.t_end - self.t_start) / (self.n_points - 1)

    def times(self) -> FloatArray:
        """Sample times."""
        return np.linspace(self.t_start, self.t_end, self.n_points)
