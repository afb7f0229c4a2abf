"""CSV and JSON emission of trajectories, sweeps and reports.

Any object with a ``csv_header`` tuple and a ``csv_rows()`` iterator can be
written. Numbers use 10 significant digits by default, or 17 with
``full_precision=True`` which round-trips every float exactly. Missing
values are written as empty CSV fields and ``null`` in JSON.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass

from .model import ProfitBreakdown

DEFAULT_DIGITS = 10
FULL_DIGITS = 17


@dataclass(frozen=True)
class Table:
    """Header plus typed rows, as read back from CSV."""

    csv_header: tuple[str, ...]
    rows: tuple[tuple, ...]

    def csv_rows(self):
        return iter(self.rows)


@dataclass(frozen=True)
class BreakdownTable:
    breakdowns: tuple[ProfitBreakdown, ...]

    csv_header = ("method", "revenue", "holding", "production_linear",
                  "production_quadratic", "development_setup", "total")

    def csv_rows(self):
        for b in self.breakdowns:
            yield tuple(b.as_dict()[k] for k in self.csv_header)


def _as_table(result):
    if isinstance(result, ProfitBreakdown):
        return BreakdownTable((result,))
    if isinstance(result, (list, tuple)) and all(isinstance(b, ProfitBreakdown) for b in result):
        return BreakdownTable(tuple(result))
    return result


def _cell(value, digits: int) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, (int, float)):
        return format(float(value), f".{digits}g")
    return str(getattr(value, "value", value))


def format_csv(result, full_precision: bool = False) -> str:
    table = _as_table(result)
    digits = FULL_DIGITS if full_precision else DEFAULT_DIGITS
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(table.csv_header)
    for row in table.csv_rows():
        writer.writerow([_cell(v, digits) for v in row])
    return buf.getvalue()


def emit_csv(result, destination, full_precision: bool = False) -> int:
    """Write ``result`` as UTF-8 CSV to a text or binary sink; returns bytes written."""
    data = format_csv(result, full_precision).encode("utf-8")
    _write(destination, data)
    return len(data)


def _json_value(value):
    if value is None or isinstance(value, (bool, str)):
        return value
    if isinstance(value, (int, float)):
        return float(value)
    return getattr(value, "value", str(value))


def records(result) -> list[dict]:
    """Rows as dicts keyed by the CSV header."""
    table = _as_table(result)
    return [dict(zip(table.csv_header, (_json_value(v) for v in row)))
            for row in table.csv_rows()]


def format_json(result) -> str:
    return json.dumps(records(result), indent=2) + "\n"


def emit_json(result, destination) -> int:
    """Write ``result`` as a JSON array with one object per row."""
    data = format_json(result).encode("utf-8")
    _write(destination, data)
    return len(data)


def _write(destination, data: bytes) -> None:
    if isinstance(destination, io.TextIOBase) or hasattr(destination, "encoding"):
        destination.write(data.decode("utf-8"))
    else:
        destination.write(data)


def _parse(text: str):
    if text == "":
        return None
    try:
        return float(text)
    except ValueError:
        return text


def read_csv(source) -> Table:
    """Parse CSV text (or a text stream) written by :func:`emit_csv`."""
    text = source if isinstance(source, str) else source.read()
    reader = csv.reader(io.StringIO(text))
    header = next(reader, None)
    if header is None:
        raise ValueError("empty CSV input")
    rows = tuple(tuple(_parse(c) for c in row) for row in reader)
    return Table(tuple(header), rows)
