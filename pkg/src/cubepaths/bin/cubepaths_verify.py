#!/usr/bin/env python3

import argparse
import os
import sys

script_dir = os.path.dirname(os.path.realpath(__file__))
if __name__ == "__main__":
    sys.path.append(os.path.join(script_dir, "..", ".."))

from cubepaths.checker import describe_path, validate_decomposition
from cubepaths.config import EXIT_CODES
from cubepaths.utils import ParseError, add_common_arguments, read_decomposition, run_command


def add_arguments(parser: argparse.ArgumentParser):
    parser.add_argument("-n", type=int, required=True, help="cube dimension")
    parser.add_argument("-k", type=int, required=True, help="path length")
    parser.add_argument("-i", "--in", dest="input", required=True, help="certificate file to check")
    parser.add_argument("--workers", type=int, default=1, help="joblib workers (-1 for all cores)")
    add_common_arguments(parser)


def cline(argv=None):
    parser = argparse.ArgumentParser(description="Check a QPATH certificate.")
    add_arguments(parser)
    return parser.parse_args(argv)


def run(args) -> int:
    try:
        d = read_decomposition(args.input)
    except OSError as e:
        raise ParseError(f"Cannot read {args.input}: {e}") from e
    if (d.n, d.k) != (args.n, args.k):
        raise ParseError(f"Header has n={d.n} k={d.k}, expected n={args.n} k={args.k}", line=1)
    report = validate_decomposition(d, num_workers=args.workers)
    if report:
        print(f"VALID n={d.n} k={d.k} count={len(d)}")
        return EXIT_CODES["ok"]
    print(f"INVALID {report.describe(d.n)}")
    index = report.failure.path_index
    if index is not None and index < len(d):
        print(f"  path {index}: {describe_path(d.paths[index], d.n)}")
    return EXIT_CODES["infeasible"]


def main(argv=None) -> int:
    return run_command(run, cline(argv))


if __name__ == "__main__":
    sys.exit(main())
