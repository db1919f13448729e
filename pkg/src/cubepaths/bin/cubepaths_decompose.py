#!/usr/bin/env python3

import argparse
import os
import sys

script_dir = os.path.dirname(os.path.realpath(__file__))
if __name__ == "__main__":
    sys.path.append(os.path.join(script_dir, "..", ".."))

from loguru import logger

from cubepaths.checker import validate_decomposition, validate_walk_decomposition
from cubepaths.config import EXIT_CODES
from cubepaths.constructions import decompose, eulerian_walk_decomposition, even_block_size, even_n_decomposition
from cubepaths.constructions import even_path_length
from cubepaths.cube import InfeasibleError
from cubepaths.utils import add_common_arguments, resolve_cache_path, run_command, write_decomposition


def add_arguments(parser: argparse.ArgumentParser):
    parser.add_argument("-n", type=int, required=True, help="cube dimension")
    parser.add_argument("-k", type=int, default=None, help="path length")
    parser.add_argument("-o", "--out", default=None, help="certificate file to write")
    parser.add_argument("--even", action="store_true", help="even n: paths of length t*2^(n/t-1)")
    parser.add_argument("-t", type=int, default=None, help="odd divisor of n for --even")
    parser.add_argument("--walks", action="store_true", help="even n: cut an Eulerian circuit into walks")
    parser.add_argument("--stats-only", action="store_true", help="build and verify, write nothing")
    parser.add_argument("--cache", default=None, help="Hamiltonian cache file")
    parser.add_argument("--workers", type=int, default=1, help="joblib workers (-1 for all cores)")
    add_common_arguments(parser)


def cline(argv=None):
    parser = argparse.ArgumentParser(description="Decompose Q_n into paths of length k.")
    add_arguments(parser)
    return parser.parse_args(argv)


def build(args):
    cache = resolve_cache_path(args.cache)
    parallel = args.workers != 1
    if args.walks:
        if args.k is None:
            raise ValueError("--walks needs -k")
        return eulerian_walk_decomposition(args.n, args.k), validate_walk_decomposition
    if args.even:
        t = args.t if args.t is not None else (None if args.k is None else even_block_size(args.n, args.k))
        if t is None:
            raise InfeasibleError("k = t·2^(n/t−1) with t odd, t | n violated", args.n, args.k)
        if args.k is not None and (args.n % t or even_path_length(args.n, t) != args.k):
            raise InfeasibleError("k = t·2^(n/t−1) violated", args.n, args.k)
        d = even_n_decomposition(args.n, t, cache_path=cache, parallel=parallel, num_workers=args.workers)
        return d, validate_decomposition
    if args.k is None:
        raise ValueError("-k is required")
    d = decompose(args.n, args.k, cache_path=cache, parallel=parallel, num_workers=args.workers)
    return d, validate_decomposition


def run(args) -> int:
    if args.out is None and not args.stats_only:
        raise ValueError("give -o/--out or --stats-only")
    d, check = build(args)
    report = check(d, num_workers=args.workers)
    if not report:
        logger.error(f"Construction failed self-verification: {report.describe(d.n)}")
        return EXIT_CODES["internal"]
    print(f"OK n={d.n} k={d.k} count={len(d)}")
    if not args.stats_only:
        write_decomposition(d, args.out)
        logger.info(f"Wrote {args.out}")
    return EXIT_CODES["ok"]


def main(argv=None) -> int:
    return run_command(run, cline(argv))


if __name__ == "__main__":
    sys.exit(main())
