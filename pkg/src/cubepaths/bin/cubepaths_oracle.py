#!/usr/bin/env python3

import argparse
import os
import sys

script_dir = os.path.dirname(os.path.realpath(__file__))
if __name__ == "__main__":
    sys.path.append(os.path.join(script_dir, "..", ".."))

from loguru import logger

from cubepaths.config import DEFAULT_NODE_LIMIT, DEFAULT_TIME_LIMIT, EXIT_CODES
from cubepaths.oracle import SearchBudget, SearchOutcome, brute_force_decomposition
from cubepaths.utils import add_common_arguments, run_command, write_decomposition


def add_arguments(parser: argparse.ArgumentParser):
    parser.add_argument("-n", type=int, required=True, help="cube dimension (at most 5)")
    parser.add_argument("-k", type=int, required=True, help="path length")
    parser.add_argument("--node-limit", type=int, default=DEFAULT_NODE_LIMIT)
    parser.add_argument("--time-limit", type=float, default=DEFAULT_TIME_LIMIT)
    parser.add_argument("-o", "--out", default=None, help="write the witness here when one exists")
    add_common_arguments(parser)


def cline(argv=None):
    parser = argparse.ArgumentParser(description="Exact-cover search on a tiny cube.")
    add_arguments(parser)
    return parser.parse_args(argv)


def run(args) -> int:
    result = brute_force_decomposition(args.n, args.k, SearchBudget(args.node_limit, args.time_limit))
    print(result.outcome.value)
    logger.info(f"{result.nodes} search nodes in {result.elapsed:.2f}s")
    if result.outcome is SearchOutcome.EXISTS and args.out:
        write_decomposition(result.witness, args.out)
    return EXIT_CODES["ok"]


def main(argv=None) -> int:
    return run_command(run, cline(argv))


if __name__ == "__main__":
    sys.exit(main())
