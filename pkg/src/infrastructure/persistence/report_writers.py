"""Canonical JSON, CSV and plain-table report writers."""

import csv
import json
import logging
from fractions import Fraction
from typing import Any, Dict, List, TextIO

from src.domain.exceptions.domain_exceptions import ReportWriteException
from src.domain.interfaces.report_writer import IReportWriter
from src.infrastructure.config.settings import OutputFormat

logger = logging.getLogger(__name__)

APPROX_PLACES = 12


def render_rational(value: Fraction) -> str:
    """``num/den``, integers included (``3/1``)."""
    return f"{value.numerator}/{value.denominator}"


def decimal_hint(value: Fraction, places: int = APPROX_PLACES) -> str:
    """Truncated decimal expansion by exact long division."""
    sign = "-" if value < 0 else ""
    value = abs(value)
    whole, remainder = divmod(value.numerator, value.denominator)
    digits = []
    for _ in range(places):
        remainder *= 10
        digit, remainder = divmod(remainder, value.denominator)
        digits.append(str(digit))
    return f"{sign}{whole}.{''.join(digits)}"


class JsonReportWriter:
    """Writes sorted-key, indented JSON; rationals as strings."""

    def __init__(self, approx: bool = False) -> None:
        """Initialize writer.

        Args:
            approx: Add a ``<key>_approx`` decimal next to every rational field
        """
        self._approx = approx

    def _convert(self, value: Any) -> Any:
        if isinstance(value, Fraction):
            return render_rational(value)
        if isinstance(value, dict):
            converted = {}
            for key, item in value.items():
                converted[key] = self._convert(item)
                if self._approx and isinstance(item, Fraction):
                    converted[f"{key}_approx"] = decimal_hint(item)
            return converted
        if isinstance(value, (list, tuple)):
            return [self._convert(item) for item in value]
        return value

    def write_document(self, document: Dict[str, Any], stream: TextIO) -> None:
        """Write one JSON document and a trailing newline.

        Raises:
            ReportWriteException: If the document cannot be encoded or written
        """
        try:
            stream.write(json.dumps(self._convert(document), sort_keys=True, indent=2))
            stream.write("\n")
        except (TypeError, ValueError, OSError) as e:
            raise ReportWriteException(f"Failed to write JSON report: {e}") from e

    def write_rows(self, rows: List[Dict[str, Any]], stream: TextIO) -> None:
        """Write rows as a JSON array."""
        try:
            stream.write(json.dumps(self._convert(rows), sort_keys=True, indent=2))
            stream.write("\n")
        except (TypeError, ValueError, OSError) as e:
            raise ReportWriteException(f"Failed to write JSON rows: {e}") from e


class CsvReportWriter:
    """Writes a header row and LF-terminated records.

    A rational column ``x`` becomes ``x_num`` and ``x_den``.
    """

    def __init__(self, approx: bool = False) -> None:
        """Initialize writer.

        Args:
            approx: Add an ``x_approx`` column next to every rational column
        """
        self._approx = approx

    def _flatten(self, row: Dict[str, Any]) -> Dict[str, Any]:
        flat: Dict[str, Any] = {}
        for key, value in row.items():
            if isinstance(value, Fraction):
                flat[f"{key}_num"] = value.numerator
                flat[f"{key}_den"] = value.denominator
                if self._approx:
                    flat[f"{key}_approx"] = decimal_hint(value)
            elif isinstance(value, (list, tuple)):
                flat[key] = " ".join(str(item) for item in value)
            else:
                flat[key] = value
        return flat

    def write_rows(self, rows: List[Dict[str, Any]], stream: TextIO) -> None:
        """Write rows; an empty list still writes nothing but is not an error.

        Raises:
            ReportWriteException: If the rows cannot be written
        """
        flat = [self._flatten(row) for row in rows]
        if not flat:
            return
        try:
            writer = csv.DictWriter(stream, fieldnames=list(flat[0]), lineterminator="\n")
            writer.writeheader()
            writer.writerows(flat)
        except (ValueError, OSError) as e:
            raise ReportWriteException(f"Failed to write CSV rows: {e}") from e

    def write_document(self, document: Dict[str, Any], stream: TextIO) -> None:
        """Write the scalar fields of a document as a single record."""
        scalars = {k: v for k, v in document.items() if not isinstance(v, (dict, list))}
        self.write_rows([scalars], stream)


class TableReportWriter:
    """Writes aligned plain-text columns for reading in a terminal."""

    def __init__(self, approx: bool = False) -> None:
        """Initialize writer.

        Args:
            approx: Follow every rational with its decimal hint
        """
        self._approx = approx

    def _cell(self, value: Any) -> str:
        if isinstance(value, Fraction):
            text = render_rational(value)
            return f"{text} (~{decimal_hint(value)})" if self._approx else text
        if isinstance(value, (list, tuple)):
            return " ".join(self._cell(item) for item in value)
        if value is None:
            return "-"
        return str(value)

    def write_rows(self, rows: List[Dict[str, Any]], stream: TextIO) -> None:
        """Write rows under a header, one space-padded column per key.

        Raises:
            ReportWriteException: If the rows cannot be written
        """
        if not rows:
            stream.write("(no rows)\n")
            return
        headers = list(rows[0])
        cells = [[self._cell(row.get(h)) for h in headers] for row in rows]
        widths = [max(len(h), *(len(line[i]) for line in cells)) for i, h in enumerate(headers)]
        try:
            stream.write("  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip() + "\n")
            stream.write("  ".join("-" * w for w in widths) + "\n")
            for line in cells:
                stream.write("  ".join(c.ljust(w) for c, w in zip(line, widths)).rstrip() + "\n")
        except OSError as e:
            raise ReportWriteException(f"Failed to write table: {e}") from e

    def write_document(self, document: Dict[str, Any], stream: TextIO) -> None:
        """Write ``key: value`` lines; nested records are indented below their key."""
        try:
            for key in sorted(document):
                value = document[key]
                if isinstance(value, list) and value and isinstance(value[0], dict):
                    stream.write(f"{key}:\n")
                    for item in value:
                        cells = ", ".join(f"{k}={self._cell(v)}" for k, v in item.items())
                        stream.write(f"  {cells}\n")
                elif isinstance(value, dict):
                    stream.write(f"{key}:\n")
                    for k in sorted(value):
                        stream.write(f"  {k}: {self._cell(value[k])}\n")
                else:
                    stream.write(f"{key}: {self._cell(value)}\n")
        except OSError as e:
            raise ReportWriteException(f"Failed to write table: {e}") from e


def writer_for(output_format: OutputFormat, approx: bool = False) -> IReportWriter:
    """Writer for the requested output format."""
    writers = {
        OutputFormat.JSON: JsonReportWriter,
        OutputFormat.CSV: CsvReportWriter,
        OutputFormat.TABLE: TableReportWriter,
    }
    logger.debug("Using %s writer", output_format.value)
    return writers[output_format](approx)
