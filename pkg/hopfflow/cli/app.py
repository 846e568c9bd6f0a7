"""
Command-line entry point: one parser with a subcommand group per module.

Exit codes: 0 on success, 1 when a check fails or the engine rejects the
input, 2 on usage errors and unreadable input files.
"""
import argparse
import logging
import sys
from typing import List, Optional, TextIO

from hopfflow.cli.commands import feynman, graphs, hopf, prim, renorm, seq, timing
from hopfflow.cli.output import render
from hopfflow.config import settings
from hopfflow.core.exceptions import HopfflowError

logger = logging.getLogger(__name__)

COMMAND_GROUPS = (graphs, feynman, hopf, renorm, prim, seq, timing)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=settings.APP_NAME,
        description="Graph Hopf algebras, toy Feynman series, Prim flowcharts and regularized sums",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {settings.APP_VERSION}")
    parser.add_argument("--format", choices=["human", "json"], default=settings.OUTPUT_FORMAT,
                        help="Output format (default from HOPFFLOW_OUTPUT_FORMAT)")
    parser.add_argument("--log-level", default=settings.LOG_LEVEL,
                        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"], type=str.upper)
    subparsers = parser.add_subparsers(dest="command", required=True)
    for group in COMMAND_GROUPS:
        group.register(subparsers)
    return parser


def run(argv: Optional[List[str]] = None, stdout: Optional[TextIO] = None, stderr: Optional[TextIO] = None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    logging.basicConfig(level=args.log_level, stream=stderr,
                        format="%(levelname)s %(name)s: %(message)s", force=True)
    try:
        result = args.handler(args)
    except HopfflowError as exc:
        logger.debug(f"{type(exc).__name__} in {args.command} {args.action}", exc_info=True)
        stderr.write(f"error: {exc.detail}\n")
        return exc.exit_code
    except ValueError as exc:
        stderr.write(f"error: {exc}\n")
        return 1
    stdout.write(render(result, args.format))
    return result.exit_code


def main() -> None:
    sys.exit(run())
