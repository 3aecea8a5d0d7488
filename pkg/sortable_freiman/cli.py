# sortable_freiman/cli.py
import argparse

from .config import OUTPUT_FORMATS


def positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def int_range(text: str) -> range:
    """``"a..b"`` (inclusive) or a single ``"a"``."""
    lo_text, sep, hi_text = text.partition("..")
    lo = positive_int(lo_text.strip())
    hi = positive_int(hi_text.strip()) if sep else lo
    if hi < lo:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return range(lo, hi + 1)


def _common_options(parser: argparse.ArgumentParser, suppress: bool) -> None:
    # Leaf parsers use SUPPRESS so an option given before the subcommand survives.
    def default(value):
        return argparse.SUPPRESS if suppress else value

    parser.add_argument(
        "--format",
        choices=OUTPUT_FORMATS,
        default=default(None),
        help="Report format (default: [output] format, else text)",
    )
    parser.add_argument(
        "--out",
        default=default(None),
        help="Write the report to this path instead of stdout",
    )
    parser.add_argument(
        "--config",
        default=default(None),
        help="Path to configuration file (default: sortable_freiman.conf if present)",
    )
    parser.add_argument(
        "--debug",
        action="store_true",
        default=default(False),
        help="Enable verbose debug logging",
    )
    parser.add_argument(
        "--quiet",
        action="store_true",
        default=default(False),
        help="Suppress console logging",
    )
    parser.add_argument(
        "--workers",
        type=positive_int,
        default=default(None),
        help="Sweep process pool size (default: [sweep] workers)",
    )


def _family_parsers(sub, common, dot_required: bool) -> None:
    dot_help = "Write the sorted graph as DOT to this path ('-' for stdout)"

    cmd_borel = sub.add_parser("borel", parents=[common], help="Principal Borel ideal B(u)")
    cmd_borel.add_argument("--u", required=True, help="Borel generator, e.g. x3^2 or '0 0 2'")
    cmd_borel.add_argument("--n", type=positive_int, required=True, help="Number of variables")
    cmd_borel.add_argument("--dot", required=dot_required, help=dot_help)

    cmd_ver = sub.add_parser(
        "veronese", parents=[common], help="Veronese-type ideal I_{k,n,d} with constant bound"
    )
    cmd_ver.add_argument("--k", type=positive_int, required=True, help="Exponent bound")
    cmd_ver.add_argument("--n", type=positive_int, required=True, help="Number of variables")
    cmd_ver.add_argument("--d", type=positive_int, required=True, help="Degree")
    cmd_ver.add_argument("--dot", required=dot_required, help=dot_help)

    cmd_set = sub.add_parser("set", parents=[common], help="Generator set read from a file")
    cmd_set.add_argument("--file", required=True, help="Generator file ('n d' header)")
    cmd_set.add_argument("--dot", required=dot_required, help=dot_help)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="sortable-freiman",
        description="Freiman test for equigenerated monomial ideals via sorted-graph chordality",
    )
    _common_options(parser, suppress=False)

    common = argparse.ArgumentParser(add_help=False)
    _common_options(common, suppress=True)

    sub = parser.add_subparsers(dest="command", required=True)

    # Single-ideal analysis
    cmd_analyze = sub.add_parser("analyze", parents=[common], help="Analyze one ideal")
    _family_parsers(
        cmd_analyze.add_subparsers(dest="family", required=True), common, dot_required=False
    )

    # Classification sweeps
    cmd_sweep = sub.add_parser(
        "sweep",
        parents=[common],
        help="Cross-check prediction, Freiman count and chordality over a parameter grid",
    )
    sweep_sub = cmd_sweep.add_subparsers(dest="family", required=True)
    sweep_borel = sweep_sub.add_parser("borel", parents=[common], help="All B(u), deg u = d")
    sweep_borel.add_argument("--n", type=int_range, required=True, help="Variables, e.g. 3..5")
    sweep_borel.add_argument("--d", type=int_range, required=True, help="Degrees, e.g. 2..5")
    sweep_ver = sweep_sub.add_parser("veronese", parents=[common], help="All I_{k,n,d}")
    sweep_ver.add_argument("--k", type=int_range, required=True, help="Bounds, e.g. 1..3")
    sweep_ver.add_argument("--n", type=int_range, required=True, help="Variables, e.g. 2..5")
    sweep_ver.add_argument(
        "--d",
        type=int_range,
        help="Degrees (default: every d with a nonempty domain, 1..kn-1)",
    )

    # Sorted-graph export only
    cmd_export = sub.add_parser(
        "export", parents=[common], help="Write only the sorted graph as DOT"
    )
    _family_parsers(
        cmd_export.add_subparsers(dest="family", required=True), common, dot_required=True
    )

    return parser
