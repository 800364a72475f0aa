"""Main application entry point."""

import logging
import sys
from pathlib import Path
from typing import List, Optional

# Add parent directory to path to allow imports
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.cli.argument_parser import CLIArguments, parse_arguments
from src.cli.cli_handler import CLIHandler

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def configure_logging(args: CLIArguments) -> None:
    """Send logs to stderr; stdout only carries the report.

    Args:
        args: Parsed CLI arguments
    """
    level = logging.WARNING
    if args.verbose:
        level = logging.DEBUG
    elif args.quiet:
        level = logging.ERROR
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr)


def main(argv: Optional[List[str]] = None) -> int:
    """Main application entry point.

    Args:
        argv: Arguments without the program name; sys.argv when None

    Returns:
        Exit code
    """
    args = parse_arguments(argv)
    configure_logging(args)
    return CLIHandler().handle(args)


if __name__ == "__main__":
    sys.exit(main())
