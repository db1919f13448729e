#!/usr/bin/env python3

import argparse
import os
import sys

script_dir = os.path.dirname(os.path.realpath(__file__))
if __name__ == "__main__":
    sys.path.append(os.path.join(script_dir, "..", ".."))

from cubepaths.checker import infeasibility_reason
from cubepaths.config import EXIT_CODES
from cubepaths.utils import add_common_arguments, run_command


def add_arguments(parser: argparse.ArgumentParser):
    parser.add_argument("-n", type=int, required=True, help="cube dimension")
    parser.add_argument("-k", type=int, required=True, help="path length")
    parser.add_argument("--even", action="store_true", help="use the conjectured even-n criterion")
    add_common_arguments(parser)


def cline(argv=None):
    parser = argparse.ArgumentParser(description="Necessary conditions for Q_n into paths of length k.")
    add_arguments(parser)
    return parser.parse_args(argv)


def verdict(n: int, k: int, even: bool) -> tuple[bool, str]:
    reason = infeasibility_reason(n, k, even=even)
    label = "CONJECTURED-" if even else ""
    if reason is None:
        return True, f"{label}FEASIBLE"
    return False, f"{label}INFEASIBLE ({reason})"


def run(args) -> int:
    ok, line = verdict(args.n, args.k, args.even)
    print(line)
    return EXIT_CODES["ok"] if ok else EXIT_CODES["infeasible"]


def main(argv=None) -> int:
    return run_command(run, cline(argv))


if __name__ == "__main__":
    sys.exit(main())
