"""Load work-order records from delimited text and window them by date."""

from __future__ import annotations

import csv
import logging
from dataclasses import dataclass
from datetime import date, datetime
from pathlib import Path
from typing import Iterable

from scnet.errors import ConfigError, CorpusError, RowError

logger = logging.getLogger(__name__)

ISO = "iso"


@dataclass(frozen=True)
class DocumentRecord:
    """One work order: its ID, issue date, assigned agency and statement of work."""

    doc_id: str
    date: date
    assigned_agency: str | None
    text: str


@dataclass(frozen=True)
class ColumnMapping:
    """Names of the source columns that feed each record field.

    ``date_format`` is either ``"iso"`` (ISO-8601 date or datetime) or a
    ``strptime`` pattern. Time-of-day components are discarded.
    """

    doc_id_column: str = "id"
    date_column: str = "date"
    agency_column: str = "agency"
    text_column: str = "sow"
    date_format: str = ISO

    def __post_init__(self) -> None:
        cols = self.columns()
        if any(not c or not c.strip() for c in cols):
            raise ConfigError(f"column names must be non-empty: {cols}")
        if len(set(cols)) != len(cols):
            raise ConfigError(f"column names must be distinct: {cols}")
        if not self.date_format:
            raise ConfigError("date_format must be non-empty")

    def columns(self) -> tuple[str, str, str, str]:
        return (self.doc_id_column, self.date_column, self.agency_column, self.text_column)


@dataclass(frozen=True)
class DateRange:
    """Closed calendar-date interval ``[start, end]``."""

    start: date
    end: date

    def __post_init__(self) -> None:
        if self.start > self.end:
            raise ConfigError(f"date range start {self.start} is after end {self.end}")

    def __contains__(self, day: object) -> bool:
        return isinstance(day, date) and self.start <= day <= self.end

    @property
    def days(self) -> int:
        return (self.end - self.start).days + 1


def parse_date(value: str, date_format: str = ISO) -> date:
    """Parse a date or datetime string down to a calendar date.

    Raises ``ValueError`` when the value does not match ``date_format``.
    """
    value = value.strip()
    if not value:
        raise ValueError("empty date")
    if date_format == ISO:
        if value.endswith(("Z", "z")):
            value = value[:-1] + "+00:00"
        if len(value) == 10:
            return date.fromisoformat(value)
        return datetime.fromisoformat(value).date()
    return datetime.strptime(value, date_format).date()


def load_documents(
    path: str | Path,
    mapping: ColumnMapping | None = None,
    *,
    delimiter: str = ",",
    strict: bool = True,
) -> list[DocumentRecord]:
    """Read one ``DocumentRecord`` per data row, in file order.

    With ``strict=False`` rows whose date does not parse are skipped and
    counted in a warning instead of aborting the load. Duplicate or empty
    document IDs are always fatal.
    """
    mapping = mapping or ColumnMapping()
    path = Path(path)
    records: list[DocumentRecord] = []
    seen: dict[str, int] = {}
    skipped = 0
    with path.open(newline="", encoding="utf-8-sig") as fh:
        reader = csv.DictReader(fh, delimiter=delimiter)
        header = reader.fieldnames or []
        for column in mapping.columns():
            if column not in header:
                raise ConfigError(f"{path}: missing column {column!r} (header: {header})")
        for row in reader:
            line = reader.line_num
            doc_id = (row[mapping.doc_id_column] or "").strip()
            if not doc_id:
                raise RowError("empty document id", path=path, row=line)
            raw_date = row[mapping.date_column] or ""
            try:
                day = parse_date(raw_date, mapping.date_format)
            except ValueError as exc:
                if strict:
                    raise RowError(f"unparseable date {raw_date!r}: {exc}", path=path, row=line) from None
                skipped += 1
                continue
            if doc_id in seen:
                raise CorpusError(f"{path}: duplicate doc_id {doc_id!r} on rows {seen[doc_id]} and {line}")
            seen[doc_id] = line
            agency = (row[mapping.agency_column] or "").strip() or None
            records.append(DocumentRecord(doc_id, day, agency, row[mapping.text_column] or ""))
    if skipped:
        logger.warning("%s: skipped %d row(s) with unparseable dates", path, skipped)
    return records


def filter_by_date(records: Iterable[DocumentRecord], window: DateRange) -> list[DocumentRecord]:
    return [r for r in records if window.start <= r.date <= window.end]


def split_range(window: DateRange, window_days: int) -> list[DateRange]:
    """Partition ``window`` into consecutive sub-ranges of ``window_days`` days.

    The last sub-range is shortened to end on ``window.end``.
    """
    if window_days < 1:
        raise ConfigError(f"window_days must be >= 1, got {window_days}")
    out = []
    start = window.start
    step = window_days - 1
    while start <= window.end:
        end = min(date.fromordinal(start.toordinal() + step), window.end)
        out.append(DateRange(start, end))
        start = date.fromordinal(end.toordinal() + 1)
    return out
