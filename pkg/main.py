#!/usr/bin/env python3
"""cycloweight CLI - irreducible cyclic codes and their weight enumerators."""

import argparse
import sys

from src.cycloweight import (
    Config,
    CycloweightError,
    build_catalog,
    build_factor_listing,
    build_records,
    code_distribution,
    undetected_error_probability,
    verify_catalog,
)
from src.cycloweight.config import CHANNELS, OUTPUT_FORMATS
from src.cycloweight.wdist import channel_label
from src.renderers import ProgressRenderer, get_renderer


def create_parser() -> argparse.ArgumentParser:
    """Create the CLI argument parser."""
    parser = argparse.ArgumentParser(
        prog="cycloweight",
        description="Irreducible cyclic codes of length n over F_q with exact weight enumerators.",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # Every irreducible cyclic code of length 288 over F_31
  python main.py enumerate --q 31 --n 288

  # Factor x^7 - 1 over F_2 with the cyclotomic-coset oracle
  python main.py factor --q 2 --n 7 --oracle

  # Check all closed forms against brute force
  python main.py verify --q 3 --n 8 --cap 1000000

  # Undetected-error probability of one code
  python main.py pue --q 3 --n 8 --check-poly "x^2 + 1" --p 0.3
        """,
    )

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--q", type=int, required=True, help="Field size, a prime power")
    common.add_argument("--n", type=int, required=True, help="Code length, coprime to q")
    common.add_argument(
        "--format",
        choices=OUTPUT_FORMATS,
        default="text",
        help="Output format (default: text)",
    )
    common.add_argument(
        "--verbose", "-v",
        action="store_true",
        help="Report progress on stderr",
    )

    subparsers = parser.add_subparsers(dest="command", help="Command to run")

    # === Enumerate command ===
    enum_parser = subparsers.add_parser(
        "enumerate", parents=[common], help="Catalog every irreducible cyclic code"
    )
    enum_parser.add_argument(
        "--expand",
        action="store_true",
        help="Include expanded weight distributions",
    )

    # === Factor command ===
    factor_parser = subparsers.add_parser(
        "factor", parents=[common], help="Factor x^n - 1 over F_q"
    )
    factor_parser.add_argument(
        "--oracle",
        action="store_true",
        help="Also factor through cyclotomic cosets (works outside the closed-form regime)",
    )
    factor_parser.add_argument(
        "--degree-cap",
        type=int,
        default=12,
        help="Largest splitting-field degree for the oracle (default: 12)",
    )

    # === Verify command ===
    verify_parser = subparsers.add_parser(
        "verify", parents=[common], help="Cross-check closed forms against brute force"
    )
    verify_parser.add_argument(
        "--cap",
        type=int,
        default=10**6,
        help="Largest number of codewords to enumerate per code (default: 1000000)",
    )
    verify_parser.add_argument(
        "--workers",
        type=int,
        default=1,
        help="Threads verifying codes in parallel (default: 1)",
    )
    verify_parser.add_argument(
        "--chunks",
        type=int,
        default=1,
        help="Message-space chunks per brute-force run (default: 1)",
    )
    verify_parser.add_argument(
        "--lemma-q-bound",
        type=int,
        default=9,
        help="Largest q for exhaustive weight-lemma checks (default: 9)",
    )

    # === Pue command ===
    pue_parser = subparsers.add_parser(
        "pue", parents=[common], help="Probability of an undetected error"
    )
    pue_parser.add_argument(
        "--check-poly",
        required=True,
        help='Check polynomial h, e.g. "x^2 + 1"',
    )
    pue_parser.add_argument("--p", type=float, required=True, help="Symbol error probability")
    pue_parser.add_argument(
        "--channel",
        choices=CHANNELS,
        default="qary",
        help="binary (q = 2 only) or q-ary symmetric (default: qary)",
    )
    pue_parser.add_argument(
        "--cap",
        type=int,
        default=10**6,
        help="Brute-force cap when h is not a catalog factor (default: 1000000)",
    )

    return parser


def status(args, message: str) -> None:
    if args.verbose:
        print(message, file=sys.stderr)


def cmd_enumerate(args) -> int:
    """Handle the enumerate command."""
    config = Config(output_format=args.format, expand=args.expand, verbose=args.verbose)
    status(args, f"Factoring x^{args.n} - 1 over F_{args.q}...")
    params, _, records = build_records(args.q, args.n)
    status(args, f"Found {len(records)} irreducible cyclic codes ({params.case.value} case)")

    doc = build_catalog(params, records, expand=config.expand)
    renderer = get_renderer(config)
    renderer.emit(renderer.render_catalog(doc))
    renderer.finalize()
    return 0


def cmd_factor(args) -> int:
    """Handle the factor command."""
    config = Config(
        output_format=args.format, coset_degree_cap=args.degree_cap, verbose=args.verbose
    )
    listing = build_factor_listing(args.q, args.n, args.oracle, config.coset_degree_cap)
    renderer = get_renderer(config)
    renderer.emit(renderer.render_factors(listing))
    renderer.finalize()
    return 1 if listing.agree is False else 0


def cmd_verify(args) -> int:
    """Handle the verify command."""
    config = Config(
        cap=args.cap,
        lemma_q_bound=args.lemma_q_bound,
        workers=args.workers,
        chunks=args.chunks,
        output_format=args.format,
        verbose=args.verbose,
    )
    params, tower, records = build_records(args.q, args.n)
    status(args, f"Verifying {len(records)} codes (cap {config.cap}, {config.workers} workers)")

    progress = ProgressRenderer(config, total=len(records)) if config.verbose else None
    result = verify_catalog(
        records,
        params,
        tower,
        config,
        on_report=progress.render_state if progress else None,
    )
    if progress:
        progress.finalize()

    renderer = get_renderer(config)
    renderer.emit(renderer.render_verification(build_catalog(params, records), result))
    renderer.finalize()
    return 0 if result.ok else 1


def format_probability(value: float) -> str:
    """Twelve significant digits, trailing zeros kept; an exact zero keeps twelve decimals."""
    if value == 0:
        return "0.000000000000"
    return f"{value:#.12g}"


def cmd_pue(args) -> int:
    """Handle the pue command."""
    config = Config(cap=args.cap, channel=args.channel, verbose=args.verbose)
    # fail on channel/probability before any factoring work
    undetected_error_probability({}, args.q, args.n, args.p, config.channel)
    dist, source = code_distribution(args.q, args.n, args.check_poly, config.cap, config.chunks)
    status(args, f"Distribution from {source}; channel {channel_label(config.channel)}")
    value = undetected_error_probability(dist, args.q, args.n, args.p, config.channel)
    print(format_probability(value))
    return 0


COMMANDS = {
    "enumerate": cmd_enumerate,
    "factor": cmd_factor,
    "verify": cmd_verify,
    "pue": cmd_pue,
}


def main(argv: list[str] | None = None) -> int:
    """Main entry point."""
    parser = create_parser()
    args = parser.parse_args(argv)

    if not args.command:
        parser.print_help()
        return 2

    try:
        return COMMANDS[args.command](args)
    except CycloweightError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except ValueError as e:
        print(f"error: invalid option: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
