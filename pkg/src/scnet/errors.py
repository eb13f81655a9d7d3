"""Exception hierarchy.

The CLI maps ``ConfigError`` to exit status 1 and ``DataError`` to exit
status 2.
"""

from __future__ import annotations

from pathlib import Path


class ScnError(Exception):
    """Base class for every error raised by this package."""


class ConfigError(ScnError, ValueError):
    """Bad configuration: missing columns, invalid ranges, unknown options."""


class DataError(ScnError):
    """Input data that cannot be processed."""


class RowError(DataError):
    """A single input row is malformed."""

    def __init__(self, message: str, *, path: str | Path | None = None, row: int | None = None):
        self.path = None if path is None else str(path)
        self.row = row
        where = ""
        if self.path is not None:
            where = self.path if row is None else f"{self.path}:{row}"
        elif row is not None:
            where = f"row {row}"
        super().__init__(f"{where}: {message}" if where else message)


class CorpusError(DataError):
    """The corpus as a whole violates an invariant (e.g. duplicate doc_id)."""


class GazetteerConflictError(DataError):
    """Two surfaces normalize identically but link to different stakeholder IDs."""


class EvaluationError(DataError):
    """Gold annotations and extractions cannot be compared."""
