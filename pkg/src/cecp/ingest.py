"""CSV ingestion of dated observations.

One value column, optionally one date column; rows are read in file
order.  Parsing is strict: blank or non-numeric values and non-finite
numbers abort with the offending data row number (header excluded) rather
than being skipped, because a silently dropped row would shift every
window after it.
"""

from __future__ import annotations

import csv
import math
from pathlib import Path

from .errors import DataError
from .ordinal import TimeSeries


def _column_index(header: list[str], column: str, path: str) -> int:
    hits = [i for i, name in enumerate(header) if name == column]
    if not hits:
        raise DataError(f"{path}: column '{column}' not found in header {header}")
    if len(hits) > 1:
        raise DataError(f"{path}: column '{column}' appears {len(hits)} times in header")
    return hits[0]


def ingest_csv(
    path,
    date_column: str | None = None,
    value_column: str = "value",
    name: str | None = None,
) -> TimeSeries:
    """Read one series from a headered CSV file.

    Date strings are preserved verbatim as labels when ``date_column`` is
    given.  The series name defaults to the file stem.
    """
    path = Path(path)
    if name is None:
        name = path.stem
    with open(path, newline="", encoding="utf-8") as handle:
        reader = csv.reader(handle)
        try:
            header = next(reader)
        except StopIteration:
            raise DataError(f"{path}: file is empty, expected a header row") from None
        value_idx = _column_index(header, value_column, str(path))
        date_idx = (
            _column_index(header, date_column, str(path))
            if date_column is not None
            else None
        )
        values: list[float] = []
        labels: list[str] = []
        for row_number, row in enumerate(reader, start=1):
            if not row:
                raise DataError(f"{path}: row {row_number}: empty row")
            try:
                raw = row[value_idx]
            except IndexError:
                raise DataError(
                    f"{path}: row {row_number}: missing '{value_column}' field"
                ) from None
            raw = raw.strip()
            if not raw:
                raise DataError(f"{path}: row {row_number}: blank value")
            try:
                value = float(raw)
            except ValueError:
                raise DataError(
                    f"{path}: row {row_number}: cannot parse value {raw!r}"
                ) from None
            if not math.isfinite(value):
                raise DataError(
                    f"{path}: row {row_number}: non-finite value {raw!r}"
                )
            values.append(value)
            if date_idx is not None:
                try:
                    labels.append(row[date_idx])
                except IndexError:
                    raise DataError(
                        f"{path}: row {row_number}: missing '{date_column}' field"
                    ) from None
    if not values:
        raise DataError(f"{path}: no data rows")
    return TimeSeries(
        values=values,
        labels=tuple(labels) if date_idx is not None else None,
        name=name,
    )
