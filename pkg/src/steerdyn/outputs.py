"""Output files and run catalogue."""

import logging
from pathlib import Path

import numpy as np
from sqlalchemy.exc import SQLAlchemyError

from .database import Database
from .runs import RunRecord, output_root, preset_record
from .types import FloatArray

logger = logging.getLogger(__name__)

CATALOGUE_NAME = "runs.sqlite"
CSV_FORMAT = "%.17g"


def record_path(run_id: str, out_dir: Path) -> Path:
    """Path of a run's metadata document."""
    return out_dir / f"{run_id}_record.json"


def write_outputs(record: RunRecord, out_dir: str | Path) -> list[Path]:
    """
    Write a run's CSV curves and metadata document, and catalogue the run.

    Each curve goes to ``<run_id>_<solver>_<knob>=<value>.csv`` with a one-line
    header and 17 significant digits per value. If a file fails to write or
    the catalogue rejects the run, the files already written are removed.

    Parameters
    ----------
    record
        Run record.
    out_dir
        Output directory, created if missing.

    Returns
    -------
        Paths written, CSV files first and the metadata document last.

    Raises
    ------
    OSError
        If a file cannot be written; the message names the path.
    SQLAlchemyError
        If the run cannot be catalogued.
    """
    out_dir = Path(out_dir)
    written: list[Path] = []
    path = out_dir
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
        for curve in record.curves:
            path = out_dir / curve.file_name(record.run_id)
            np.savetxt(
                path,
                curve.columns(),
                fmt=CSV_FORMAT,
                delimiter=",",
                header=",".join(curve.header),
                comments="",
            )
            written.append(path)
        path = record_path(record.run_id, out_dir)
        path.write_text(record.model_dump_json(indent=2), encoding="utf-8")
        written.append(path)
    except OSError as err:
        _remove(written)
        msg = f"Failed to write {path}: {err}"
        raise OSError(msg) from err

    database = None
    try:
        database = Database(out_dir / CATALOGUE_NAME)
        database.save_record(record, out_dir=out_dir)
    except SQLAlchemyError:
        _remove(written)
        raise
    finally:
        if database is not None:
            database.close()
    logger.info("Wrote %d files for run %s to %s", len(written), record.run_id, out_dir)
    return written


def _remove(paths: list[Path]) -> None:
    for path in paths:
        path.unlink(missing_ok=True)


def read_trace_csv(path: str | Path) -> tuple[tuple[str, ...], FloatArray]:
    """
    Read a curve CSV file.

    Returns
    -------
        Column names and an (n, 2) array of values.
    """
    path = Path(path)
    with path.open(encoding="utf-8") as file:
        header = tuple(file.readline().strip().split(","))
    data = np.loadtxt(path, delimiter=",", skiprows=1, ndmin=2)
    return header, data


def read_record(path: str | Path) -> RunRecord:
    """Read a run's metadata document."""
    return RunRecord.model_validate_json(Path(path).read_text(encoding="utf-8"))


def run_preset(
    name: str, out_dir: str | Path | None = None, workers: int | None = None
) -> RunRecord:
    """
    Run a figure preset and write its outputs.

    Parameters
    ----------
    name
        One of "fig1", "fig2", "fig3", "fig4".
    out_dir, optional
        Output directory; defaults to the configured output root.
    workers, optional
        Worker processes for the sweep.

    Returns
    -------
        Record of the preset run.
    """
    record = preset_record(name, workers=workers)
    write_outputs(record, output_root() if out_dir is None else out_dir)
    return record
