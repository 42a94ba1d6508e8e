#!/usr/bin/env python3
"""Monte-Carlo check that sampling + maximum likelihood attains the
predicted asymptotic risk constants for every protocol group."""

import argparse

from groupest.cli import main as cli_main

GROUPS = ("u1", "su2", "so3_plus", "so3_minus")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--samples", type=int, default=400)
    parser.add_argument("--trials", type=int, default=500)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    for group in GROUPS:
        cli_main([
            "simulate", "--group", group,
            "--samples", str(args.samples), "--trials", str(args.trials),
            "--seed", str(args.seed), "--format", "csv",
        ])
    cli_main(["simulate", "--group", "schur", "--samples", "4000",
              "--format", "csv"])


if __name__ == "__main__":
    main()
