#!/usr/bin/env python3
"""Recompute every worked example shipped in data/ and print the results.

Usage: python scripts/corpus_report.py
"""

import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from ghw.betti import betti_fine_hochster, betti_fine_matroid, render_diagram  # noqa: E402
from ghw.cli import build_matroid, load_input  # noqa: E402
from ghw.simplicial import independence_complex  # noqa: E402
from ghw.weights import (  # noqa: E402
    mds_profile,
    weights_bruteforce,
    whitney_polynomial,
    whitney_text,
)

DATA = ROOT / "data"


def show(name, M, alexander=False):
    print(f"== {name} (n={M.n}, rank={M.rank(M.full)}) ==")
    table = betti_fine_matroid(M)
    print("weights:", " ".join(map(str, weights_bruteforce(M))))
    print(render_diagram(table))
    profile = mds_profile(M, table)
    level = profile.mds_level if profile.mds_level is not None else "none"
    print(f"mds level: {level}   linear resolution: {profile.linear_resolution}")
    if alexander:
        dual_cx = independence_complex(M).alexander_dual()
        print("alexander dual diagram:")
        print(render_diagram(betti_fine_hochster(dual_cx, 2)))
    print()


def main():
    for name in ["h1.txt", "h2.txt", "h3.txt", "h4.txt", "h5.txt", "h6.txt"]:
        show(name, build_matroid(load_input(str(DATA / name)), 20), alexander=True)
    g7 = build_matroid(load_input(str(DATA / "g7.txt")), 20)
    show("g7.txt (dual: the parity check matroid)", g7.dual())
    for name in ["h8.txt", "h9.txt"]:
        M = build_matroid(load_input(str(DATA / name)), 20)
        show(name, M, alexander=True)
        print(f"   dual matroid weights: {weights_bruteforce(M.dual())}")
        print()
    m1 = build_matroid(load_input(str(DATA / "h1.txt")), 20)
    print("Whitney polynomial of the running example:")
    print(whitney_text(whitney_polynomial(m1)))


if __name__ == "__main__":
    main()
