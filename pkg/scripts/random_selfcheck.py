#!/usr/bin/env python3
"""Cross-check the fast Betti path against the homology oracle on random matroids.

Usage: python scripts/random_selfcheck.py [count] [max_n] [seed]
"""

import random
import sys
import time
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from ghw.betti import betti_fine_hochster, betti_fine_matroid  # noqa: E402
from ghw.finfield import FieldMatrix, PrimeField  # noqa: E402
from ghw.matroid import Matroid  # noqa: E402
from ghw.simplicial import independence_complex  # noqa: E402
from ghw.weights import weights_bruteforce, weights_from_betti  # noqa: E402


def main():
    count = int(sys.argv[1]) if len(sys.argv) > 1 else 50
    max_n = int(sys.argv[2]) if len(sys.argv) > 2 else 9
    seed = int(sys.argv[3]) if len(sys.argv) > 3 else 0
    rng = random.Random(seed)
    start = time.perf_counter()
    bad = 0
    for idx in range(count):
        p = rng.choice([2, 3, 5])
        n = rng.randint(3, max_n)
        m = rng.randint(1, n - 1)
        entries = [[rng.randrange(p) for _ in range(n)] for _ in range(m)]
        M = Matroid.from_matrix(FieldMatrix(PrimeField(p), entries))
        fast = betti_fine_matroid(M)
        hoch = betti_fine_hochster(independence_complex(M), p)
        k = M.n - M.rank(M.full)
        ok = fast == hoch and weights_from_betti(fast, k) == weights_bruteforce(M)
        if not ok:
            bad += 1
            print(f"MISMATCH on GF({p}) {m}x{n}: {entries}")
    elapsed = time.perf_counter() - start
    print(f"{count} matroids, {bad} mismatches, {elapsed:.1f}s")
    sys.exit(1 if bad else 0)


if __name__ == "__main__":
    main()
