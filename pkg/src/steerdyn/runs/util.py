"""Run identifiers."""

import hashlib
import json
from typing import Any

RUN_ID_LENGTH = 16


def hash_from_dict(dct: dict[str, Any]) -> str:
    """
    Generate hash from a JSON-compatible dictionary.

    Parameters
    ----------
    dct
        Dictionary of JSON-compatible values.

    Returns
    -------
        Hash string.
    """
    dct_json = json.dumps(
        dct, sort_keys=True, ensure_ascii=True, separators=(",", ":")
    ).encode("utf-8")
    return hashlib.sha256(dct_json).hexdigest()


def run_id(
    kind: str,
    config: dict[str, Any],
    version: str,
    sweep: dict[str, Any] | None = None,
) -> str:
    """
    Content-addressed run identifier.

    Examples
    --------
    >>> len(run_id("simulate", {"alpha": 0.25}, "0.1.0"))
    16
    """
    data = {"kind": kind, "config": config, "sweep": sweep, "version": version}
    return hash_from_dict(data)[:RUN_ID_LENGTH]
