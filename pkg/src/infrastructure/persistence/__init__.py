"""Report rendering."""

from .report_writers import (
    CsvReportWriter,
    JsonReportWriter,
    TableReportWriter,
    decimal_hint,
    render_rational,
    writer_for,
)

__all__ = [
    "CsvReportWriter",
    "JsonReportWriter",
    "TableReportWriter",
    "decimal_hint",
    "render_rational",
    "writer_for",
]
