"""Matroids on bitmask ground sets: rank/nullity, circuits, duality, restriction.

Subsets of the ground set {0, ..., n-1} are bitmasks throughout; element i
corresponds to bit ``1 << i``.  Every enumeration here is O(2^n) in the worst
case, so ground sets are capped (default 20) instead of silently hanging.

Beyond the usual matroid calculus this module implements the non-redundant
circuit machinery: a family of circuits is non-redundant when each member
owns an element private to it, and the maximum size of such a family inside
a subset equals the subset's nullity.  ``nonredundant_witness`` constructs a
family of exactly that size.
"""

from __future__ import annotations

from itertools import combinations
from typing import Callable, Iterable, Sequence

from .finfield import FieldMatrix, matrix_rank

DEFAULT_MAX_GROUND = 20


class CapExceeded(ValueError):
    """Ground set larger than the configured bitmask cap."""


def mask_of(elems: Iterable[int]) -> int:
    """Bitmask of a collection of 0-based elements."""
    m = 0
    for e in elems:
        if e < 0:
            raise ValueError(f"negative element {e}")
        m |= 1 << e
    return m


def elements(mask: int) -> tuple[int, ...]:
    """Sorted 0-based elements of a bitmask."""
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length() - 1)
        mask ^= b
    return tuple(out)


def submasks(mask: int):
    """All submasks of ``mask``, in decreasing numeric order, ending with 0."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


class Matroid:
    """A matroid given by a rank oracle on bitmask subsets of {0..n-1}.

    Instances are immutable after construction; the rank memo is a plain
    dict filled with deterministic values, so concurrent readers can only
    ever observe a consistent rank (worst case a benign recomputation).
    """

    def __init__(
        self,
        n: int,
        rank_fn: Callable[[int], int],
        provenance: str = "oracle",
        max_n: int = DEFAULT_MAX_GROUND,
    ):
        if n < 0:
            raise ValueError("ground set size must be >= 0")
        if n > max_n:
            raise CapExceeded(
                f"ground set size {n} exceeds the cap {max_n}; subset sweeps are O(2^n),"
                f" raise max_n explicitly to proceed"
            )
        self.n = n
        self.provenance = provenance
        self._rank_fn = rank_fn
        self._memo: dict[int, int] = {0: 0}
        self._circuits: tuple[int, ...] | None = None
        self._bases: tuple[int, ...] | None = None
        self._rank_table: list[int] | None = None

    # -- constructors -------------------------------------------------

    @classmethod
    def from_matrix(cls, H: FieldMatrix, max_n: int = DEFAULT_MAX_GROUND) -> "Matroid":
        """Column matroid of a matrix over GF(p): rank(sigma) = rank of those columns."""

        def rank_fn(mask: int) -> int:
            return matrix_rank(H, elements(mask))

        M = cls(H.cols, rank_fn, provenance="matrix", max_n=max_n)
        M.matrix = H
        return M

    @classmethod
    def from_bases(
        cls, n: int, bases: Iterable[Iterable[int]], max_n: int = DEFAULT_MAX_GROUND
    ) -> "Matroid":
        """Matroid with the given bases; the exchange axiom is validated."""
        base_masks = sorted({mask_of(b) for b in bases})
        if not base_masks:
            raise ValueError("a matroid needs at least one basis")
        for b in base_masks:
            if b >> n:
                raise ValueError(f"basis {elements(b)} is not inside the ground set of size {n}")
        sizes = {b.bit_count() for b in base_masks}
        if len(sizes) != 1:
            raise ValueError(f"bases are not equicardinal: sizes {sorted(sizes)}")
        base_set = set(base_masks)
        for A in base_masks:
            for B in base_masks:
                if A == B:
                    continue
                for x in elements(A & ~B):
                    xbit = 1 << x
                    if not any(((A ^ xbit) | (1 << y)) in base_set for y in elements(B & ~A)):
                        raise ValueError(
                            "basis exchange axiom fails for bases "
                            f"{elements(A)} and {elements(B)} at element {x}"
                        )

        def rank_fn(mask: int) -> int:
            return max((mask & b).bit_count() for b in base_masks)

        M = cls(n, rank_fn, provenance="bases", max_n=max_n)
        M._bases = tuple(sorted(base_masks))
        return M

    @classmethod
    def from_circuits(
        cls, n: int, circuits: Iterable[Iterable[int]], max_n: int = DEFAULT_MAX_GROUND
    ) -> "Matroid":
        """Matroid with the given circuit collection; circuit axioms are validated."""
        circ_masks = sorted({mask_of(c) for c in circuits}, key=lambda m: (m.bit_count(), m))
        for c in circ_masks:
            if c == 0:
                raise ValueError("the empty set cannot be a circuit")
            if c >> n:
                raise ValueError(f"circuit {elements(c)} is not inside the ground set of size {n}")
        for i, c1 in enumerate(circ_masks):
            for c2 in circ_masks[i + 1 :]:
                if c1 & c2 == c1 or c1 & c2 == c2:
                    raise ValueError(
                        f"circuits must form an antichain: {elements(c1)} and {elements(c2)}"
                    )
        # Weak circuit elimination: the input is supposed to be *all* circuits.
        for i, c1 in enumerate(circ_masks):
            for c2 in circ_masks[i + 1 :]:
                for x in elements(c1 & c2):
                    target = (c1 | c2) ^ (1 << x)
                    if not any(c & ~target == 0 for c in circ_masks):
                        raise ValueError(
                            "circuit elimination axiom fails for "
                            f"{elements(c1)} and {elements(c2)} at element {x}"
                        )

        def rank_fn(mask: int) -> int:
            # Greedy independent augmentation; valid once the axioms hold.
            indep = 0
            m = mask
            while m:
                b = m & -m
                m ^= b
                cand = indep | b
                if not any(c & ~cand == 0 for c in circ_masks):
                    indep = cand
            return indep.bit_count()

        M = cls(n, rank_fn, provenance="circuits", max_n=max_n)
        M._circuits = tuple(circ_masks)
        return M

    @classmethod
    def uniform(cls, r: int, n: int, max_n: int = DEFAULT_MAX_GROUND) -> "Matroid":
        """The uniform matroid U(r, n): every r-subset is a basis."""
        if not 0 <= r <= n:
            raise ValueError(f"uniform matroid needs 0 <= r <= n, got r={r}, n={n}")

        def rank_fn(mask: int) -> int:
            return min(mask.bit_count(), r)

        return cls(n, rank_fn, provenance="uniform", max_n=max_n)

    # -- rank oracle ---------------------------------------------------

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def rank(self, mask: int) -> int:
        r = self._memo.get(mask)
        if r is None:
            if mask < 0 or mask > self.full:
                raise ValueError("subset is not inside the ground set")
            r = self._memo[mask] = self._rank_fn(mask)
        return r

    def nullity(self, mask: int) -> int:
        return mask.bit_count() - self.rank(mask)

    def is_independent(self, mask: int) -> bool:
        return self.rank(mask) == mask.bit_count()

    def rank_table(self) -> list[int]:
        """Ranks of all 2^n subsets, indexed by bitmask."""
        if self._rank_table is None:
            self._rank_table = [self.rank(m) for m in range(1 << self.n)]
        return self._rank_table

    # -- derived structure ----------------------------------------------

    def circuits(self) -> tuple[int, ...]:
        """All circuits (minimal dependent sets) as bitmasks.

        Enumerated breadth-first by cardinality, pruning supersets of the
        circuits already found; circuits have at most rank+1 elements.
        """
        if self._circuits is None:
            found: list[int] = []
            top = self.rank(self.full)
            for size in range(1, top + 2):
                for combo in combinations(range(self.n), size):
                    m = mask_of(combo)
                    if any(c & ~m == 0 for c in found):
                        continue
                    if self.rank(m) < size:
                        found.append(m)
            self._circuits = tuple(sorted(found, key=lambda m: (m.bit_count(), m)))
        return self._circuits

    def bases(self) -> tuple[int, ...]:
        """All bases (maximal independent sets) as bitmasks."""
        if self._bases is None:
            r = self.rank(self.full)
            found = []
            for combo in combinations(range(self.n), r):
                m = mask_of(combo)
                if self.rank(m) == r:
                    found.append(m)
            self._bases = tuple(found)
        return self._bases

    def loops(self) -> int:
        """Bitmask of rank-zero elements."""
        m = 0
        for x in range(self.n):
            if self.rank(1 << x) == 0:
                m |= 1 << x
        return m

    def isthmuses(self) -> int:
        """Bitmask of elements lying in no circuit (loops of the dual)."""
        m = 0
        top = self.rank(self.full)
        for x in range(self.n):
            if self.rank(self.full ^ (1 << x)) == top - 1:
                m |= 1 << x
        return m

    def dual(self) -> "Matroid":
        """Matroid whose bases are the complements of this one's bases."""
        parent = self
        full = self.full
        top = self.rank(full)

        def rank_fn(mask: int) -> int:
            return mask.bit_count() + parent.rank(full ^ mask) - top

        return Matroid(self.n, rank_fn, provenance=f"dual-of-{self.provenance}")

    def restrict(self, mask: int) -> "Matroid":
        """Restriction to ``mask``, reindexed onto {0..|mask|-1}."""
        elems = elements(mask)
        bits = [1 << e for e in elems]
        parent = self

        def rank_fn(sub: int) -> int:
            pm = 0
            s = sub
            while s:
                b = s & -s
                s ^= b
                pm |= bits[b.bit_length() - 1]
            return parent.rank(pm)

        return Matroid(len(elems), rank_fn, provenance=f"restriction-of-{self.provenance}")


# -- non-redundant circuit calculus -------------------------------------


def _validate_circuit(M: Matroid, mask: int) -> None:
    if M.nullity(mask) != 1:
        raise ValueError(f"{elements(mask)} is not a circuit (nullity != 1)")
    m = mask
    while m:
        b = m & -m
        m ^= b
        if not M.is_independent(mask ^ b):
            raise ValueError(f"{elements(mask)} is not a circuit (a proper subset is dependent)")


def is_nonredundant(M: Matroid, circuits: Sequence[int]) -> bool:
    """Does every given circuit own an element private to it within the family?"""
    circs = list(circuits)
    for c in circs:
        _validate_circuit(M, c)
    for i, c in enumerate(circs):
        others = 0
        for j, d in enumerate(circs):
            if j != i:
                others |= d
        if c & ~others == 0:
            return False
    return True


def circuit_within(M: Matroid, mask: int) -> int | None:
    """Some circuit contained in ``mask``, or None if the set is independent.

    Deterministic: repeatedly drops the smallest element whose removal keeps
    the set dependent.
    """
    if M.is_independent(mask):
        return None
    tau = mask
    for x in elements(mask):
        cand = tau & ~(1 << x)
        if tau & (1 << x) and M.nullity(cand) >= 1:
            tau = cand
    return tau


def nonredundant_witness(M: Matroid, sigma: int) -> tuple[int, ...]:
    """A family of exactly nullity(sigma) non-redundant circuits inside sigma.

    Built by peeling one circuit element at a time and re-extending: among
    the circuits inside sigma through the freed element, the one meeting the
    fewest private markers of the current family is added (smallest bitmask
    first on ties).  The extension step always finds a circuit avoiding all
    markers, which keeps the family non-redundant.
    """
    d = M.nullity(sigma)
    if d == 0:
        return ()
    tau = circuit_within(M, sigma)
    xbit = tau & -tau
    fam = nonredundant_witness(M, sigma & ~xbit)
    if len(fam) != d - 1:
        raise AssertionError("peeling a circuit element must drop the nullity by exactly 1")
    markers = 0
    for i, c in enumerate(fam):
        others = 0
        for j, e in enumerate(fam):
            if j != i:
                others |= e
        priv = c & ~others
        markers |= priv & -priv
    cands = [c for c in M.circuits() if c & ~sigma == 0 and c & xbit]
    best = min(cands, key=lambda c: ((c & markers).bit_count(), c))
    if best & markers:
        raise AssertionError("circuit elimination guarantees a marker-free extension")
    return fam + (best,)


def nonredundancy_degree(M: Matroid, sigma: int) -> int:
    """Maximum size of a non-redundant circuit family inside ``sigma``.

    Computed constructively via ``nonredundant_witness``; equals the nullity.
    """
    return len(nonredundant_witness(M, sigma))
