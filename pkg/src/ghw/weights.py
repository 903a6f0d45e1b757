"""Weight hierarchies, Wei duality, MDS profiling, Whitney polynomial, Clifford data.

The generalized Hamming weights of a matroid are d_i = min{|sigma| :
nullity(sigma) = i} for i = 1..k with k = n - rank.  They can be read off a
Betti table as the minimum total degree with a nonzero entry per homological
degree; ``weights_bruteforce`` is the independent oracle that minimizes over
all subsets directly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .betti import BettiTable
from .matroid import Matroid, elements
from .simplicial import independence_complex


def weights_from_betti(table: BettiTable, k: int) -> tuple[int, ...]:
    """d_i = min{d : beta_{i,d} != 0} for i = 1..k, from the matroid's own table."""
    out = []
    for i in range(1, k + 1):
        d = table.min_degree(i)
        if d is None:
            raise ValueError(
                f"no Betti entry in homological degree {i} <= k={k}: "
                f"inconsistent table (the resolution must have length exactly k)"
            )
        out.append(d)
    return tuple(out)


def weights_bruteforce(M: Matroid) -> tuple[int, ...]:
    """Direct minimization of |sigma| over nullity classes; the oracle path."""
    k = M.n - M.rank(M.full)
    best = [None] * (k + 1)
    rank_of = M.rank_table()
    for mask in range(1 << M.n):
        size = mask.bit_count()
        i = size - rank_of[mask]
        if 1 <= i <= k and (best[i] is None or size < best[i]):
            best[i] = size
    return tuple(best[1:])


def support_size(M: Matroid) -> int:
    """Number of elements lying in some circuit (d_k equals this)."""
    union = 0
    for c in M.circuits():
        union |= c
    return union.bit_count()


def wei_duality_check(M: Matroid) -> bool | None:
    """Check that the hierarchies of M and its dual partition {1..n}.

    Classical statement: {d_i(M)} and {n+1-d_j(dual)} are disjoint with
    union {1..n}.  Returns None ("not applicable") when M has loops or
    isthmuses, where the classical statement need not hold as stated.
    """
    if M.loops() or M.isthmuses():
        return None
    n = M.n
    primal = set(weights_bruteforce(M))
    dual = {n + 1 - d for d in weights_bruteforce(M.dual())}
    return not (primal & dual) and (primal | dual) == set(range(1, n + 1))


@dataclass(frozen=True)
class MdsProfile:
    """Diagnostics around the Singleton bound d_i <= n - k + i."""

    k: int
    rank: int
    weights: tuple[int, ...]
    mds_level: int | None  # smallest h with d_h = n - k + h; 1 means MDS
    is_mds: bool
    linear_resolution: bool  # all graded entries (i >= 1) on a single diagram row
    tail_is_linear: bool | None  # entries for i >= mds_level sit in degree rank + i
    isthmus_free: bool
    isthmuses: tuple[int, ...]
    alexander_dual_is_matroid: bool | None  # evaluated only for MDS candidates


def mds_profile(M: Matroid, table: BettiTable) -> MdsProfile:
    """Profile h-MDS-ness of the matroid from its own Betti table.

    ``table`` must be the matroid's own table (not a dual or Alexander
    one).  The Alexander-dual matroid-axiom check is only run for genuine
    MDS candidates (linear resolution and no isthmus), since it sweeps all
    faces of the dual complex.
    """
    r = M.rank(M.full)
    k = M.n - r
    ws = weights_from_betti(table, k)
    level = None
    for h in range(1, k + 1):
        if ws[h - 1] == r + h:
            level = h
            break
    rows = {d - i for (i, d) in table.graded() if i >= 1}
    linear = len(rows) <= 1
    if level is None:
        tail_linear = None
    else:
        tail_linear = all(
            d == r + i for (i, d) in table.graded() if i >= level
        )
    isthmus_mask = M.isthmuses()
    isthmus_free = isthmus_mask == 0
    dual_check = None
    if linear and isthmus_free and k >= 1:
        dual_check = independence_complex(M).alexander_dual().is_matroid_complex()
    return MdsProfile(
        k=k,
        rank=r,
        weights=ws,
        mds_level=level,
        is_mds=level == 1,
        linear_resolution=linear,
        tail_is_linear=tail_linear,
        isthmus_free=isthmus_free,
        isthmuses=elements(isthmus_mask),
        alexander_dual_is_matroid=dual_check,
    )


def whitney_polynomial(M: Matroid) -> dict[tuple[int, int], int]:
    """Coefficients of W(x, y) = sum over subsets X of x^(r(E)-r(X)) y^(|X|-r(X))."""
    r = M.rank(M.full)
    rank_of = M.rank_table()
    coeffs: dict[tuple[int, int], int] = {}
    for mask in range(1 << M.n):
        key = (r - rank_of[mask], mask.bit_count() - rank_of[mask])
        coeffs[key] = coeffs.get(key, 0) + 1
    return coeffs


def whitney_terms(coeffs: dict[tuple[int, int], int]) -> list[list[int]]:
    """[[x-exponent, y-exponent, coefficient], ...] sorted by falling exponents."""
    return [
        [ex, ey, c]
        for (ex, ey), c in sorted(coeffs.items(), key=lambda kv: (-kv[0][0], -kv[0][1]))
    ]


def whitney_text(coeffs: dict[tuple[int, int], int]) -> str:
    parts = []
    for ex, ey, c in whitney_terms(coeffs):
        factors = []
        if c != 1 or (ex == 0 and ey == 0):
            factors.append(str(c))
        if ex == 1:
            factors.append("x")
        elif ex > 1:
            factors.append(f"x^{ex}")
        if ey == 1:
            factors.append("y")
        elif ey > 1:
            factors.append(f"y^{ey}")
        parts.append(" ".join(factors))
    return " + ".join(parts) if parts else "0"


def clifford_and_gonality(
    M: Matroid, weights: tuple[int, ...]
) -> tuple[tuple[int, ...], int | None]:
    """Gonality sequence (t-gonality is d_t) and the matroid Clifford index.

    The Clifford index is min{d_i - 2i : i >= 1, d_i <= rank - 2 + i}, and
    is undefined (None) when no i qualifies, which happens exactly when
    d_1 > rank - 1 (so for MDS and almost-MDS matroids).
    """
    r = M.rank(M.full)
    candidates = [d - 2 * i for i, d in enumerate(weights, start=1) if d <= r - 2 + i]
    return tuple(weights), (min(candidates) if candidates else None)


@dataclass(frozen=True)
class WeightReport:
    """Everything the weights pipeline knows about one matroid."""

    n: int
    k: int
    weights: tuple[int, ...]
    support: int
    mds_level: int | None
    degenerate: bool
    whitney: dict[tuple[int, int], int]
    clifford: int | None
    gonality: tuple[int, ...]

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "weights": list(self.weights),
            "support": self.support,
            "mds_level": self.mds_level,
            "degenerate": self.degenerate,
            "whitney": whitney_terms(self.whitney),
            "clifford": self.clifford,
            "gonality": list(self.gonality),
        }


def weight_report(M: Matroid, table: BettiTable) -> WeightReport:
    r = M.rank(M.full)
    k = M.n - r
    ws = weights_from_betti(table, k)
    gon, cliff = clifford_and_gonality(M, ws)
    profile = mds_profile(M, table)
    return WeightReport(
        n=M.n,
        k=k,
        weights=ws,
        support=support_size(M),
        mds_level=profile.mds_level,
        degenerate=not profile.isthmus_free,
        whitney=whitney_polynomial(M),
        clifford=cliff,
        gonality=gon,
    )
