"""Types."""

from .arrays import ComplexArray, FloatArray, FloatLike
from .fields import KernelFamily, Knob, SolverChoice, SolverTag
from .sqlalchemy import (
    DateTimeTypeDecorator,
    FloatArrayTypeDecorator,
    PathTypeDecorator,
    RowID,
    SQLModelT,
)

__all__ = [
    "ComplexArray",
    "FloatArray",
    "FloatLike",
    "KernelFamily",
    "Knob",
    "SolverChoice",
    "SolverTag",
    "DateTimeTypeDecorator",
    "FloatArrayTypeDecorator",
    "PathTypeDecorator",
    "RowID",
    "SQLModelT",
]
