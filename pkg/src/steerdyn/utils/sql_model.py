"""Convenience methods for database."""

from collections.abc import Iterator

from ..types import SQLModelT


def row_to_dict(
    row: SQLModelT, *, exclude_defaults: bool = True, exclude_id: bool = False
) -> dict:
    """
    Dump model into a dictionary and optionally remove default fields.

    Parameters
    ----------
    row
        Database row.
    exclude_defaults
        If True, exclude default values from model dump.
    exclude_id
        If True, exclude the surrogate id field.

    Returns
    -------
    dict
        row.model_dump() with or without default values.
    """
    data = row.model_dump(exclude_defaults=exclude_defaults)
    if exclude_id:
        data.pop("id", None)
    return data


def verify_single_iteration(iterator: Iterator[SQLModelT]) -> SQLModelT:
    """
    Verify only a single object in Iterable return.

    Raises
    ------
    ValueError
        length of iterator is 0 or > 1.
    """
    row = next(iterator, None)
    if row is None:
        msg = "iterator does not contain any database rows."
        raise ValueError(msg)
    if next(iterator, None) is not None:
        msg = "iterator contains more than one database row."
        raise ValueError(msg)
    return row
