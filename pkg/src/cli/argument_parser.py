"""Command-line argument parser for padic-ds."""

import argparse
from typing import List, Optional

from src import __version__

COMMANDS = ("construct", "measure", "verify", "spectrum")


class CLIArguments:
    """Container for parsed CLI arguments.

    Values stay as typed on the command line; ``Config`` parses and validates
    them.
    """

    def __init__(
        self,
        command: str,
        p: Optional[str] = None,
        family: Optional[str] = None,
        rule: Optional[str] = None,
        base: Optional[str] = None,
        digits: Optional[str] = None,
        x: Optional[str] = None,
        table: Optional[str] = None,
        full_support: bool = False,
        range: Optional[str] = None,
        depth: Optional[int] = None,
        cap: Optional[int] = None,
        witnesses: bool = False,
        shells: Optional[int] = None,
        check: Optional[str] = None,
        n: Optional[int] = None,
        psi: Optional[str] = None,
        q: Optional[int] = None,
        k: Optional[int] = None,
        max_n: Optional[int] = None,
        max_span: Optional[int] = None,
        max_depth: Optional[int] = None,
        k_max: Optional[int] = None,
        samples: Optional[int] = None,
        seed: int = 0,
        output_format: str = "json",
        approx: bool = False,
        parallel: int = 1,
        verbose: bool = False,
        quiet: bool = False,
    ) -> None:
        """Initialize CLI arguments.

        Args:
            command: Subcommand name
            p: Prime, or ``inf`` for the real line
            family: Family token (a, b, c, fa, fk, fa-strict)
            rule: Rule token
            base: Base rule token of a primed rule
            digits: Target digits x_0 x_1 ...
            x: Target measure as num/den
            table: Explicit psi table ``n:psi,...``
            full_support: Evaluate the shell rule at every n
            range: Stage range ``N:T``
            depth: Schedule depth D
            cap: Support bound for construct, prime search cap otherwise
            witnesses: Measure over witness stages instead of a range
            shells: Largest shell to tabulate
            check: Check name or ``all``
            n: Stage index for single checks
            psi: psi(n) for single checks
            q: Real-line starting bound Q
            k: Shell index for tau checks
            max_n: Exhaustive bound on n
            max_span: Largest N - k in the Moebius count
            max_depth: Largest depth or precision in map checks
            k_max: Largest shell in the zero-full table
            samples: Random sample size
            seed: Random seed
            output_format: json, csv or table
            approx: Add decimal hints next to rationals
            parallel: Worker processes
            verbose: Log at DEBUG
            quiet: Log errors only
        """
        self.command = command
        self.p = p
        self.family = family
        self.rule = rule
        self.base = base
        self.digits = digits
        self.x = x
        self.table = table
        self.full_support = full_support
        self.range = range
        self.depth = depth
        self.cap = cap
        self.witnesses = witnesses
        self.shells = shells
        self.check = check
        self.n = n
        self.psi = psi
        self.q = q
        self.k = k
        self.max_n = max_n
        self.max_span = max_span
        self.max_depth = max_depth
        self.k_max = k_max
        self.samples = samples
        self.seed = seed
        self.output_format = output_format
        self.approx = approx
        self.parallel = parallel
        self.verbose = verbose
        self.quiet = quiet


def _global_options(nested: bool = False) -> argparse.ArgumentParser:
    # Subcommand copies must not overwrite values given before the subcommand.
    parent = argparse.ArgumentParser(
        add_help=False, argument_default=argparse.SUPPRESS if nested else None
    )
    parent.add_argument(
        "--format",
        dest="output_format",
        choices=["json", "csv", "table"],
        default=argparse.SUPPRESS if nested else "json",
        help="Report format on stdout (default: json)",
    )
    parent.add_argument(
        "--approx",
        action="store_true",
        help="Add labelled decimal hints next to every rational",
    )
    parent.add_argument(
        "--parallel",
        type=int,
        default=argparse.SUPPRESS if nested else 1,
        metavar="K",
        help="Worker processes for stage sets; never changes the output",
    )
    verbosity = parent.add_mutually_exclusive_group()
    verbosity.add_argument("--verbose", action="store_true", help="Log at DEBUG on stderr")
    verbosity.add_argument("--quiet", action="store_true", help="Log errors only")
    return parent


def _rule_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--p", metavar="P", help="Prime (or 'inf' for the real line)")
    parser.add_argument(
        "--rule",
        metavar="RULE",
        help="zero, table, theorem1, theorem2, real-prime, prime-square or primed",
    )
    parser.add_argument("--base", metavar="RULE", help="Base rule of --rule primed")
    parser.add_argument(
        "--digits", metavar="D", help="Target digits x_0 x_1 ..., e.g. 101 or 1,12,0"
    )
    parser.add_argument("--x", metavar="R", help="Target measure as num/den")
    parser.add_argument("--table", metavar="T", help="psi table, e.g. '3:1/2,5:2'")
    parser.add_argument(
        "--full-support",
        action="store_true",
        help="Shell rule at every n instead of n = p^k q",
    )
    parser.add_argument(
        "--depth",
        type=int,
        metavar="D",
        help="Schedule depth (default: PADIC_DS_DEPTH or 8)",
    )
    parser.add_argument(
        "--cap",
        type=int,
        metavar="C",
        help="Support bound for construct; prime search cap elsewhere",
    )


def build_parser() -> argparse.ArgumentParser:
    """Create the parser with its four subcommands."""
    parser = argparse.ArgumentParser(
        prog="padic-ds",
        description="Exact p-adic Duffin-Schaeffer sets: constructions, measures and checks",
        parents=[_global_options()],
    )
    common = _global_options(nested=True)
    parser.add_argument("--version", action="version", version=f"padic-ds {__version__}")
    commands = parser.add_subparsers(dest="command", metavar="COMMAND", required=True)

    construct = commands.add_parser(
        "construct", parents=[common], help="Tabulate psi on its support"
    )
    _rule_options(construct)

    measure = commands.add_parser("measure", parents=[common], help="Exact measure of a tail union")
    _rule_options(measure)
    measure.add_argument("--family", metavar="F", help="a, b, c, fa, fk or fa-strict")
    measure.add_argument("--range", metavar="N:T", help="Stage range (default 1:100)")
    measure.add_argument(
        "--witnesses",
        action="store_true",
        help="Union over the construction's witness stages instead of a range",
    )
    measure.add_argument("--shells", type=int, metavar="K", help="Tabulate shells 0..K")

    verify = commands.add_parser("verify", parents=[common], help="Run executable checks")
    _rule_options(verify)
    verify.add_argument("--check", default="all", metavar="NAME", help="Check name or 'all'")
    verify.add_argument("--range", metavar="N:T", help="Stage range for rule-based checks")
    verify.add_argument("--n", type=int, help="Stage index")
    verify.add_argument("--psi", metavar="R", help="psi(n) as num/den")
    verify.add_argument("--q", type=int, metavar="Q", help="Real-line starting bound")
    verify.add_argument("--k", type=int, help="Shell index")
    verify.add_argument("--max-n", type=int, help="Exhaustive bound on n")
    verify.add_argument("--max-span", type=int, help="Largest N - k")
    verify.add_argument("--max-depth", type=int, help="Largest depth or precision")
    verify.add_argument("--k-max", type=int, help="Largest shell in the zero-full table")
    verify.add_argument("--samples", type=int, help="Random sample size")
    verify.add_argument("--seed", type=int, default=0, help="Random seed (default 0)")

    spectrum = commands.add_parser("spectrum", parents=[common], help="Spectrum membership test")
    spectrum.add_argument("--p", metavar="P", help="Prime")
    spectrum.add_argument("--x", metavar="R", help="Candidate measure as num/den")
    spectrum.add_argument("--family", metavar="F", default="c", help="c or b (default c)")
    return parser


def parse_arguments(argv: Optional[List[str]] = None) -> CLIArguments:
    """Parse command-line arguments.

    Args:
        argv: Arguments without the program name; sys.argv when None

    Returns:
        Parsed CLI arguments
    """
    args = build_parser().parse_args(argv)
    values = vars(args)
    return CLIArguments(
        **{key: value for key, value in values.items() if value is not None or key == "command"}
    )
