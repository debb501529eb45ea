"""Convenience methods."""

from .sql_model import row_to_dict, verify_single_iteration

__all__ = ["row_to_dict", "verify_single_iteration"]
