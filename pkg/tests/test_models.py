"""Test for models module."""

import numpy as np

from steerdyn.models import CurveRow, RunRow
from steerdyn.runs import RunRecord


def test__curve_curve_row_equivalence(record: RunRecord) -> None:
    """Test data persistence for Curve -> CurveRow."""
    curve = record.curves[0]
    curve_row = CurveRow.from_curve(curve, position=3)
    assert curve_row.position == 3
    assert curve_row.solver == curve.solver
    assert curve_row.knob == "lambda"
    assert curve_row.value == curve.value
    assert curve_row.header == ["t", "P"]
    assert np.array_equal(curve_row.x, curve.x)
    assert curve_row.params == curve.params


def test__curve_row_roundtrip(record: RunRecord) -> None:
    """Test data persistence in Curve -> CurveRow -> Curve roundtrip."""
    for curve in record.curves:
        assert CurveRow.from_curve(curve, position=0).curve() == curve


def test__run_run_row_equivalence(record: RunRecord) -> None:
    """Test data persistence for RunRecord -> RunRow."""
    run_row = RunRow.from_record(record)
    assert run_row.run_id == record.run_id
    assert run_row.timestamp == record.timestamp
    assert run_row.config == record.config
    assert run_row.out_dir is None
    assert [row.position for row in run_row.curves] == [0, 1]


def test__run_row_roundtrip(record: RunRecord) -> None:
    """Test data persistence in RunRecord -> RunRow -> RunRecord roundtrip."""
    assert RunRow.from_record(record).record() == record
