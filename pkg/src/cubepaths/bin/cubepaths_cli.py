#!/usr/bin/env python3

import argparse
import os
import sys

script_dir = os.path.dirname(os.path.realpath(__file__))
if __name__ == "__main__":
    sys.path.append(os.path.join(script_dir, "..", ".."))

from cubepaths.bin import cubepaths_decompose, cubepaths_feasible, cubepaths_ham, cubepaths_oracle, cubepaths_verify
from cubepaths.utils import run_command

COMMANDS = {
    "decompose": (cubepaths_decompose, "build a path decomposition and write a certificate"),
    "verify": (cubepaths_verify, "check a certificate file"),
    "feasible": (cubepaths_feasible, "report the necessary conditions"),
    "ham": (cubepaths_ham, "write a Hamiltonian decomposition to the cache"),
    "oracle": (cubepaths_oracle, "exact-cover search on a tiny cube"),
}


def cline(argv=None):
    parser = argparse.ArgumentParser(prog="cubepaths", description="Hypercube path decompositions.")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for name, (module, summary) in COMMANDS.items():
        sub = subparsers.add_parser(name, help=summary)
        module.add_arguments(sub)
        sub.set_defaults(run=module.run)
    return parser.parse_args(argv)


def main(argv=None) -> int:
    args = cline(argv)
    return run_command(args.run, args)


if __name__ == "__main__":
    sys.exit(main())
