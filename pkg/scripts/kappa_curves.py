#!/usr/bin/env python3
"""Emit kappa(E) tables with both asymptotic expansions for every group.

Writes one CSV per group next to this script (or under --outdir).
"""

import argparse
import pathlib

from groupest.cli import main as cli_main

SWEEPS = [
    ("u1", "plus", "0.05:30:60"),
    ("su2", "plus", "0.05:30:60"),
    ("so3", "plus", "0.05:30:60"),
    ("so3", "minus", "0.8:30:59"),
    ("real", "plus", "0.05:30:60"),
    ("heisenberg", "plus", "0.05:30:60"),
]


def run(outdir: pathlib.Path) -> None:
    outdir.mkdir(parents=True, exist_ok=True)
    for group, factor, grid in SWEEPS:
        name = group if group != "so3" else f"so3_{factor}"
        out = outdir / f"kappa_{name}.csv"
        code = cli_main([
            "kappa", "--group", group, "--factor", factor,
            "--energy-grid", grid, "--format", "csv", "--out", str(out),
        ])
        print(f"{out}: exit {code}")


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--outdir", default="kappa_tables")
    args = parser.parse_args()
    run(pathlib.Path(args.outdir))
