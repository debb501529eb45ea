"""Run catalogue database."""

import logging
from collections.abc import Iterator
from pathlib import Path
from typing import Any

from sqlalchemy.orm import selectinload
from sqlmodel import Session, SQLModel, create_engine, select

from .models import *  # noqa: F403
from .models import RunRow
from .runs import RunRecord
from .types import SQLModelT
from .utils import row_to_dict, verify_single_iteration

logger = logging.getLogger(__name__)


class Database:
    """
    Database connection manager.

    Attributes
    ----------
    path
        Path to SQLite database file.
    engine
        SQLAlchemy engine instance.
    """

    def __init__(self, path: str | Path, *, echo: bool = False) -> None:
        """
        Initialize database connection manager.

        Parameters
        ----------
        path
            Path to the SQLite database file, or ":memory:".
        echo, optional
            If True, SQL statements will be logged to the standard output.
        """
        self.path = Path(path)
        self.engine = create_engine(f"sqlite:///{path}", echo=echo)
        SQLModel.metadata.create_all(self.engine)

    def session(self) -> Session:
        """Create a new database session."""
        return Session(self.engine, expire_on_commit=False)

    def add(self, row: SQLModelT) -> SQLModelT:
        """
        Add row to database.

        Parameters
        ----------
        row
            Instance of a database model class.

        Returns
        -------
        Updated row instance.

        Raises
        ------
        SQLAlchemyError
            Database row failed to write.
        """
        with self.session() as session:
            session.add(row)
            session.commit()
            session.refresh(row)
            return row

    def delete(self, row: SQLModelT) -> None:
        """
        Delete a row, and any rows cascading from it, from the database.

        Parameters
        ----------
        row
            Instance of a database model class.
        """
        with self.session() as session:
            session.delete(session.merge(row))
            session.commit()

    def find(
        self,
        model: type[SQLModelT],
        *,
        eager_load: bool = False,
        **filters: Any,  # noqa: ANN401
    ) -> Iterator[SQLModelT]:
        """
        Find rows of a model matching column values.

        Parameters
        ----------
        model
            Database model class.
        eager_load
            If True, fully eager loads sqlmodel relationships with model return.
        **filters
            Column values to match.

        Yields
        ------
            Matching rows.
        """
        statement = select(model)
        for key, value in filters.items():
            statement = statement.where(getattr(model, key) == value)
        if eager_load:  # Add eager loading for all relationships
            for rel_name in model.__sqlmodel_relationships__:
                statement = statement.options(selectinload(getattr(model, rel_name)))
        with self.session() as session:
            yield from session.exec(statement)

    def find_or_add(self, row: SQLModelT, *keys: str) -> SQLModelT:
        """
        Find the row matching `row` on `keys`; add `row` if there is none.

        Parameters
        ----------
        row
            Instance of a database model class.
        *keys
            Column names identifying the row.

        Returns
        -------
            Existing or newly added row.
        """
        data = row_to_dict(row, exclude_defaults=False)
        filters = {key: data[key] for key in keys}
        matches = list(self.find(type(row), **filters))
        if matches:
            return matches[0]
        return self.add(row)

    def save_record(self, record: RunRecord, out_dir: Path | None = None) -> RunRow:
        """
        Store a run record, replacing any earlier run with the same id.

        Parameters
        ----------
        record
            Run record.
        out_dir, optional
            Directory holding the run's files.

        Returns
        -------
            Stored row.
        """
        for existing in list(self.find(RunRow, run_id=record.run_id)):
            logger.debug("Replacing catalogued run %s", record.run_id)
            self.delete(existing)
        return self.add(RunRow.from_record(record, out_dir=out_dir))

    def load_record(self, run_id: str) -> RunRecord:
        """
        Reconstruct a run record.

        Raises
        ------
        ValueError
            If no run has this id.
        """
        with self.session() as session:
            statement = select(RunRow).where(RunRow.run_id == run_id)
            row = verify_single_iteration(iter(session.exec(statement)))
            return row.record()

    def run_ids(self) -> list[str]:
        """Identifiers of every catalogued run."""
        return [row.run_id for row in self.find(RunRow)]

    def close(self) -> None:
        """Close the database connection.

        Seems to be needed only for testing with in-memory databases.
        """
        self.engine.dispose()
