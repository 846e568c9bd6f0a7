"""Command-line interface."""
from hopfflow.cli.app import build_parser, run

__all__ = ["build_parser", "run"]
