"""
homvariant command line.

USAGE:
    homvariant hom triangle.json k3.json                    # 6
    homvariant gentrans p3.json                             # false, orbit breakdown
    homvariant verify example1 --n 3 --y -2 c3.json         # -54 = -54
    homvariant survey --max-n 5 --jobs 4 --format json

    from homvariant.cli import run
    exit_code = run(["tutte", "c3.json"])

ENVIRONMENT VARIABLES:
    LOG_LEVEL: Log level for stderr logs (default: WARNING)
    LOG_FORMAT: json | console (default: json)
"""

from .main import (
    EXIT_BUDGET,
    EXIT_INCONSISTENT,
    EXIT_INPUT,
    EXIT_OK,
    build_parser,
    main,
    parse_residues,
    run,
)

__all__ = [
    "run",
    "main",
    "build_parser",
    "parse_residues",
    # Exit codes
    "EXIT_OK",
    "EXIT_INCONSISTENT",
    "EXIT_INPUT",
    "EXIT_BUDGET",
]
