"""Run models."""

from datetime import datetime
from pathlib import Path
from typing import Any

from pydantic import ConfigDict
from sqlalchemy.types import JSON
from sqlmodel import Column, Field, Relationship, SQLModel

from ..runs import Curve, RunRecord
from ..types import (
    DateTimeTypeDecorator,
    FloatArray,
    FloatArrayTypeDecorator,
    PathTypeDecorator,
    RowID,
)


class RunRow(SQLModel, table=True):
    """
    Catalogue entry of one run.

    Attributes
    ----------
    run_id
        Content-addressed run identifier.
    kind
        "simulate", "sweep" or "preset:<name>".
    timestamp
        Start time.
    version
        Software version.
    duration
        Wall-clock duration in seconds.
    config
        Fully resolved configuration.
    sweep
        (Optional) Swept knob and values.
    diagnostics
        Solver and convergence diagnostics.
    out_dir
        (Optional) Directory the run's files were written to.

    SQLModel Relationships
    ----------------------
    curves
        Output curves, deleted with the run.

    Methods
    -------
    from_record
        Convert RunRecord to RunRow.
    record
        Convert RunRow to RunRecord.
    """

    # - SQL Metadata ------------------
    __tablename__ = "run"
    # - Row id ------------------------
    run_id: str = Field(primary_key=True)
    # - Attributes --------------------
    kind: str
    timestamp: datetime = Field(sa_column=Column(DateTimeTypeDecorator))
    version: str
    duration: float
    config: dict[str, Any] = Field(default_factory=dict, sa_column=Column(JSON))
    sweep: dict[str, Any] | None = Field(
        default=None, sa_column=Column(JSON, nullable=True)
    )
    diagnostics: dict[str, Any] = Field(default_factory=dict, sa_column=Column(JSON))
    out_dir: Path | None = Field(
        default=None, sa_column=Column(PathTypeDecorator, nullable=True)
    )
    # - SQLModel relationships --------
    curves: list["CurveRow"] = Relationship(
        back_populates="run",
        cascade_delete=True,
        sa_relationship_kwargs={"order_by": "CurveRow.position"},
    )

    # - Methods -----------------------
    @staticmethod
    def from_record(record: RunRecord, out_dir: Path | None = None) -> "RunRow":
        """
        Instantiate RunRow, with its curves, from RunRecord.

        Returns
        -------
        RunRow
        """
        row = RunRow(
            run_id=record.run_id,
            kind=record.kind,
            timestamp=record.timestamp,
            version=record.version,
            duration=record.duration,
            config=record.config,
            sweep=record.sweep,
            diagnostics=record.diagnostics,
            out_dir=out_dir,
        )
        row.curves = [
            CurveRow.from_curve(curve, position)
            for position, curve in enumerate(record.curves)
        ]
        return row

    def record(self) -> RunRecord:
        """
        Instantiate RunRecord from RunRow.

        Curves must be loaded.

        Returns
        -------
        RunRecord
        """
        return RunRecord(
            run_id=self.run_id,
            kind=self.kind,
            timestamp=self.timestamp,
            version=self.version,
            config=self.config,
            sweep=self.sweep,
            curves=[row.curve() for row in self.curves],
            diagnostics=self.diagnostics,
            duration=self.duration,
        )


class CurveRow(SQLModel, table=True):
    """
    One output curve of a run.

    Attributes
    ----------
    run_id
        Foreign key to the parent run.
    position
        Position of the curve within its run.
    solver
        Producer of the curve.
    knob
        Knob labelling the curve.
    value
        Knob value.
    header
        Column names.
    x, y
        Column values.
    params
        Parameter echo.

    SQLModel Relationships
    ----------------------
    run
        Parent RunRow.
    """

    # - SQL Metadata ------------------
    __tablename__ = "curve"
    model_config = ConfigDict(arbitrary_types_allowed=True)
    # - Row id ------------------------
    id: RowID | None = Field(default=None, primary_key=True)
    # - Foreign keys ------------------
    run_id: str | None = Field(
        default=None, foreign_key="run.run_id", ondelete="CASCADE"
    )
    # - Attributes --------------------
    position: int
    solver: str
    knob: str
    value: float
    header: list[str] = Field(sa_column=Column(JSON))
    x: FloatArray = Field(sa_column=Column(FloatArrayTypeDecorator))
    y: FloatArray = Field(sa_column=Column(FloatArrayTypeDecorator))
    params: dict[str, Any] = Field(default_factory=dict, sa_column=Column(JSON))
    # - SQLModel relationships --------
    run: RunRow = Relationship(back_populates="curves")

    # - Methods -----------------------
    @staticmethod
    def from_curve(curve: Curve, position: int) -> "CurveRow":
        """Instantiate CurveRow from Curve."""
        return CurveRow(
            position=position,
            solver=curve.solver,
            knob=str(curve.knob),
            value=curve.value,
            header=list(curve.header),
            x=curve.x,
            y=curve.y,
            params=curve.params,
        )

    def curve(self) -> Curve:
        """Instantiate Curve from CurveRow."""
        return Curve(
            solver=self.solver,
            knob=self.knob,
            value=self.value,
            header=tuple(self.header),
            x=tuple(float(v) for v in self.x),
            y=tuple(float(v) for v in self.y),
            params=self.params,
        )
