"""SQLModel row definitions."""

from .run import CurveRow, RunRow

__all__ = ["CurveRow", "RunRow"]
