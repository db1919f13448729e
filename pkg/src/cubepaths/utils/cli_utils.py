import argparse
import sys
from typing import Callable

from loguru import logger

from cubepaths.config import EXIT_CODES
from cubepaths.cube import InfeasibleError
from cubepaths.utils.cube_io import ParseError


def setup_logging(verbose: bool = False):
    """Diagnostics go to stderr; verdicts are printed to stdout by the commands."""
    logger.remove()
    logger.add(sys.stderr, level="DEBUG" if verbose else "INFO")


def add_common_arguments(parser: argparse.ArgumentParser):
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")


def run_command(run: Callable[[argparse.Namespace], int], args: argparse.Namespace) -> int:
    """Call ``run(args)`` and map exceptions onto the shared exit codes."""
    setup_logging(getattr(args, "verbose", False))
    try:
        return run(args)
    except InfeasibleError as e:
        print(f"INFEASIBLE ({e.condition})")
        logger.error(f"Infeasible request: {e}")
        return EXIT_CODES["infeasible"]
    except ParseError as e:
        logger.error(f"Parse error: {e}")
        return EXIT_CODES["parse"]
    except ValueError as e:
        logger.error(f"Invalid request: {e}")
        return EXIT_CODES["infeasible"]
    except Exception:
        logger.exception("Internal error")
        return EXIT_CODES["internal"]
