"""Runtime settings and validated command configuration."""

from .settings import (
    Config,
    OutputFormat,
    Settings,
    parse_prime,
    parse_range,
    parse_rational,
    parse_table,
)

__all__ = [
    "Config",
    "OutputFormat",
    "Settings",
    "parse_prime",
    "parse_range",
    "parse_rational",
    "parse_table",
]
