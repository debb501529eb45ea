"""Environment settings."""

import os
from pathlib import Path

WORKERS_VAR = "STEERDYN_WORKERS"
OUTPUT_ROOT_VAR = "STEERDYN_OUTPUT_ROOT"
DEFAULT_OUTPUT_ROOT = Path("steerdyn-runs")


def worker_count() -> int:
    """
    Worker processes for sweeps.

    Reads STEERDYN_WORKERS, defaulting to the machine's CPU count.

    Raises
    ------
    ValueError
        If the variable is set but is not a positive integer.
    """
    raw = os.environ.get(WORKERS_VAR)
    if raw is None or not raw.strip():
        return os.cpu_count() or 1
    try:
        workers = int(raw)
    except ValueError as err:
        msg = f"{WORKERS_VAR} must be a positive integer, got {raw!r}"
        raise ValueError(msg) from err
    if workers < 1:
        msg = f"{WORKERS_VAR} must be a positive integer, got {raw!r}"
        raise ValueError(msg)
    return workers


def output_root() -> Path:
    """Default output directory, from STEERDYN_OUTPUT_ROOT."""
    raw = os.environ.get(OUTPUT_ROOT_VAR)
    return Path(raw) if raw else DEFAULT_OUTPUT_ROOT
