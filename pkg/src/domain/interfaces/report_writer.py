"""Report writer interface."""

from typing import Any, Dict, List, Protocol, TextIO


class IReportWriter(Protocol):
    """Interface for rendering result rows to a text stream."""

    def write_rows(self, rows: List[Dict[str, Any]], stream: TextIO) -> None:
        """Render tabular rows.

        Args:
            rows: Records sharing the same keys, in output order
            stream: Destination

        Raises:
            ReportWriteException: If the rows cannot be rendered
        """
        ...

    def write_document(self, document: Dict[str, Any], stream: TextIO) -> None:
        """Render a nested report.

        Args:
            document: Report payload
            stream: Destination

        Raises:
            ReportWriteException: If the document cannot be rendered
        """
        ...
