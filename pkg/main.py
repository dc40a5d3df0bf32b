#!/usr/bin/env python3
"""Command-line entry point for monoval."""

import argparse
import sys

from src.commands import SUBCOMMANDS, render_json, render_text, run_session
from src.config import Config
from src.errors import MonovalError, UsageError
from src.session import Session

HELP = {
    'value': 'Exact value of each expression',
    'residue': 'Residue of each expression (value at most one)',
    'rank': 'Rational rank, transcendence degree and value group',
    'kernel': 'Value-one exponent lattice and residue field generators',
    'center': 'Center of the valuation on affine space',
    'realize': 'Blow-up chart realizing the residue field, with certificate',
    'adjoin': 'Chart obtained by adjoining each expression in order',
    'group-check': 'Group invariance, induced action and quotient residues',
    'report': 'Summary of rank, kernel, center, realization and group',
}


def _add_global_flags(parser: argparse.ArgumentParser, expressions_dest: str):
    # Defaults are suppressed so that a flag given before the subcommand is
    # not overwritten by the subparser; main() fills in the defaults.
    parser.add_argument(
        '--session',
        type=str,
        default=argparse.SUPPRESS,
        help='Session JSON file (default: $MONOVAL_SESSION)'
    )
    parser.add_argument(
        '-e', '--expr',
        dest=expressions_dest,
        action='append',
        default=argparse.SUPPRESS,
        help='Expression to evaluate; may be repeated'
    )
    parser.add_argument(
        '--json',
        action='store_true',
        default=argparse.SUPPRESS,
        help='Print the machine-readable report'
    )
    parser.add_argument(
        '--digits',
        type=int,
        default=argparse.SUPPRESS,
        help=f'Significant digits of approximations (default: {Config.DEFAULT_DIGITS})'
    )


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    _add_global_flags(common, 'expressions')

    parser = argparse.ArgumentParser(
        description='Monomial valuations, residue fields, blow-up charts and group quotients'
    )
    _add_global_flags(parser, 'leading_expressions')
    subparsers = parser.add_subparsers(dest='command', help='Command to execute')
    for name, help_text in HELP.items():
        sub = subparsers.add_parser(name, parents=[common], help=help_text)
        if name in ('group-check', 'report'):
            sub.add_argument(
                '--degree',
                type=int,
                default=None,
                help=f'Degree cap for invariant generators (default: {Config.INVARIANT_DEGREE})'
            )
    return parser


def main(argv=None) -> int:
    """Run one subcommand; exit code 1 for domain errors, 2 for usage errors."""
    parser = build_parser()
    args = parser.parse_args(argv)
    session_path = getattr(args, 'session', Config.DEFAULT_SESSION)
    expressions = getattr(args, 'leading_expressions', []) + getattr(args, 'expressions', [])
    digits = getattr(args, 'digits', None)
    as_json = getattr(args, 'json', False)

    if args.command not in SUBCOMMANDS:
        parser.print_help()
        return 2
    if not session_path:
        print("Error: --session is required (or set MONOVAL_SESSION)", file=sys.stderr)
        return 2

    try:
        session = Session.load(session_path)
        data = run_session(
            session,
            args.command,
            expressions=expressions,
            digits=digits,
            degree=getattr(args, 'degree', None),
        )
    except UsageError as e:
        print(f"Error: {e}", file=sys.stderr)
        return 2
    except MonovalError as e:
        print(f"Error ({type(e).__name__}): {e}", file=sys.stderr)
        return 1

    print(render_json(data) if as_json else render_text(data))
    return 0


if __name__ == '__main__':
    sys.exit(main())
