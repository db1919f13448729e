#!/usr/bin/env python3

import argparse
import os
import sys

script_dir = os.path.dirname(os.path.realpath(__file__))
if __name__ == "__main__":
    sys.path.append(os.path.join(script_dir, "..", ".."))

from loguru import logger

from cubepaths.config import DEFAULT_NODE_LIMIT, DEFAULT_TIME_LIMIT, EXIT_CODES
from cubepaths.constructions import hamiltonian_decomposition
from cubepaths.oracle import SearchBudget, SearchOutcome, search_hamiltonian_decomposition
from cubepaths.utils import add_common_arguments, resolve_cache_path, run_command, write_ham_cache


def add_arguments(parser: argparse.ArgumentParser):
    parser.add_argument("-m", type=int, required=True, help="even cube dimension")
    parser.add_argument("--cache", default=None, help="cache file (default $QPATH_CACHE or ./qham.cache)")
    parser.add_argument("--construct", action="store_true", help="skip the search and use the construction")
    parser.add_argument("--node-limit", type=int, default=DEFAULT_NODE_LIMIT)
    parser.add_argument("--time-limit", type=float, default=DEFAULT_TIME_LIMIT)
    add_common_arguments(parser)


def cline(argv=None):
    parser = argparse.ArgumentParser(description="Write a verified Hamiltonian decomposition of Q_m to the cache.")
    add_arguments(parser)
    return parser.parse_args(argv)


def run(args) -> int:
    cache = resolve_cache_path(args.cache)
    covers = None
    if not args.construct:
        result = search_hamiltonian_decomposition(args.m, SearchBudget(args.node_limit, args.time_limit))
        if result.outcome is SearchOutcome.NONE:
            print(result.outcome.value)
            return EXIT_CODES["internal"]
        if result.outcome is SearchOutcome.EXISTS:
            covers = result.witness
        else:
            logger.warning(f"Search for Q_{args.m} ran out of budget after {result.nodes} nodes, constructing instead")
    if covers is None:
        covers = hamiltonian_decomposition(args.m)
    write_ham_cache(cache, args.m, [c.cycles[0] for c in covers])
    logger.info(f"Wrote Q_{args.m} section to {cache}")
    print(f"OK m={args.m} cycles={len(covers)}")
    return EXIT_CODES["ok"]


def main(argv=None) -> int:
    return run_command(run, cline(argv))


if __name__ == "__main__":
    sys.exit(main())
