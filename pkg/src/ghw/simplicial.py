"""Facet-represented simplicial complexes and reduced homology over GF(p).

A complex on ground set {0..n-1} is stored as its antichain of facets
(bitmasks).  The empty complex {emptyset} has the single facet 0; a complex
with no faces at all (the void complex) has no facets.

Reduced homology uses the chain complex with the incidence sign
(-1)^(r-1) for the r-th smallest element of a face; dimensions are
computed from exact boundary-matrix ranks over GF(p) and are reported as a
sparse mapping degree -> dimension (degree -1 is the empty-face slot).
"""

from __future__ import annotations

from math import comb
from typing import Iterable

import numpy as np

from .finfield import PrimeField, as_field
from .matroid import DEFAULT_MAX_GROUND, CapExceeded, elements, submasks


def _maximalize(masks: Iterable[int]) -> tuple[int, ...]:
    uniq = sorted(set(masks), key=lambda m: (-m.bit_count(), m))
    kept: list[int] = []
    for m in uniq:
        if not any(m & ~k == 0 for k in kept):
            kept.append(m)
    return tuple(sorted(kept, key=lambda m: (m.bit_count(), m)))


class SimplicialComplex:
    """A simplicial complex given by its facets (maximal faces) as bitmasks."""

    def __init__(self, n: int, facets: Iterable[int], max_n: int = DEFAULT_MAX_GROUND):
        if n < 0:
            raise ValueError("ground set size must be >= 0")
        if n > max_n:
            raise CapExceeded(
                f"ground set size {n} exceeds the cap {max_n}; face sweeps are O(2^n),"
                f" raise max_n explicitly to proceed"
            )
        facets = tuple(facets)
        for f in facets:
            if f < 0 or f >> n:
                raise ValueError(f"facet {elements(f)} is not inside the ground set of size {n}")
        self.n = n
        self.facets = _maximalize(facets)
        self._face_table: bytearray | None = None

    @property
    def is_void(self) -> bool:
        return not self.facets

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.n == other.n and self.facets == other.facets

    def __hash__(self):
        return hash((self.n, self.facets))

    def __repr__(self):
        shown = [elements(f) for f in self.facets[:6]]
        more = "..." if len(self.facets) > 6 else ""
        return f"SimplicialComplex(n={self.n}, facets={shown}{more})"

    def dim(self) -> int:
        """Dimension: one less than the largest facet size; -1 for {emptyset}."""
        if self.is_void:
            raise ValueError("the void complex has no dimension")
        return max(f.bit_count() for f in self.facets) - 1

    def face_table(self) -> bytearray:
        """Indicator of all faces, indexed by bitmask (downward closure of facets)."""
        if self._face_table is None:
            table = bytearray(1 << self.n)
            for f in self.facets:
                table[f] = 1
            for mask in range((1 << self.n) - 1, -1, -1):
                if table[mask]:
                    m = mask
                    while m:
                        b = m & -m
                        m ^= b
                        table[mask ^ b] = 1
            self._face_table = table
        return self._face_table

    def is_face(self, mask: int) -> bool:
        return any(mask & ~f == 0 for f in self.facets)

    def f_vector(self) -> tuple[int, ...]:
        """Face counts (f_-1, f_0, ..., f_dim); () for the void complex."""
        if self.is_void:
            return ()
        counts = [0] * (self.dim() + 2)
        table = self.face_table()
        for mask in range(1 << self.n):
            if table[mask]:
                counts[mask.bit_count()] += 1
        return tuple(counts)

    def restrict(self, sigma: int) -> "SimplicialComplex":
        """Faces meeting sigma, i.e. the induced subcomplex on sigma (same labels)."""
        return SimplicialComplex(self.n, (f & sigma for f in self.facets), max_n=self.n)

    def minimal_nonfaces(self) -> tuple[int, ...]:
        """Minimal non-faces; these generate the Stanley-Reisner ideal."""
        table = self.face_table()
        out = []
        for mask in range(1 << self.n):
            if table[mask]:
                continue
            m = mask
            minimal = True
            while m:
                b = m & -m
                m ^= b
                if not table[mask ^ b]:
                    minimal = False
                    break
            if minimal:
                out.append(mask)
        return tuple(sorted(out, key=lambda m: (m.bit_count(), m)))

    def alexander_dual(self) -> "SimplicialComplex":
        """Complex whose faces are complements of the non-faces of this one.

        Its facets are the complements of the minimal non-faces; for an
        independence complex those are the complements of the circuits.
        """
        full = (1 << self.n) - 1
        return SimplicialComplex(
            self.n, (full ^ m for m in self.minimal_nonfaces()), max_n=self.n
        )

    def is_matroid_complex(self) -> bool:
        """Do the faces satisfy the independent-set exchange axiom?

        Checking adjacent cardinalities suffices: faces are closed under
        subsets, so exchange for |B| = |A|+1 implies the general case.
        """
        if self.is_void:
            return False
        buckets = faces_by_cardinality(self, (1 << self.n) - 1)
        table = self.face_table()
        for c in range(len(buckets) - 1):
            for A in buckets[c]:
                for B in buckets[c + 1]:
                    ok = False
                    m = B & ~A
                    while m:
                        b = m & -m
                        m ^= b
                        if table[A | b]:
                            ok = True
                            break
                    if not ok:
                        return False
        return True


def independence_complex(M) -> SimplicialComplex:
    """The complex of independent sets of a matroid; facets are the bases."""
    return SimplicialComplex(M.n, M.bases())


def faces_by_cardinality(cx: SimplicialComplex, within: int) -> list[list[int]]:
    """Faces of the induced subcomplex on ``within``, bucketed by cardinality.

    Returns [] for a void complex; otherwise bucket k holds the k-element
    faces in increasing bitmask order, and trailing empty buckets are trimmed.
    """
    if cx.is_void:
        return []
    table = cx.face_table()
    buckets: list[list[int]] = [[] for _ in range(within.bit_count() + 1)]
    for sub in submasks(within):
        if table[sub]:
            buckets[sub.bit_count()].append(sub)
    while buckets and not buckets[-1]:
        buckets.pop()
    for b in buckets:
        b.sort()
    return buckets


def _rank_mod_p(A: np.ndarray, p: int) -> int:
    """Rank of an integer matrix over GF(p) by exact row elimination."""
    if A.size == 0:
        return 0
    A = np.array(A, dtype=np.int64) % p
    nrows, ncols = A.shape
    rank = 0
    for c in range(ncols):
        nz = np.nonzero(A[rank:, c])[0]
        if nz.size == 0:
            continue
        piv = rank + int(nz[0])
        if piv != rank:
            A[[rank, piv]] = A[[piv, rank]]
        inv = pow(int(A[rank, c]), p - 2, p)
        A[rank] = (A[rank] * inv) % p
        below = np.nonzero(A[rank + 1 :, c])[0]
        if below.size:
            rows = below + rank + 1
            A[rows] = (A[rows] - np.outer(A[rows, c], A[rank])) % p
        rank += 1
        if rank == nrows:
            break
    return rank


def boundary_matrix(lower: list[int], upper: list[int], p: int) -> np.ndarray:
    """Boundary map from the span of ``upper`` faces to the span of ``lower`` faces.

    Column j describes the face upper[j]: removing its r-th smallest element
    contributes (-1)^(r-1) to the row of the reduced face.
    """
    index = {m: i for i, m in enumerate(lower)}
    mat = np.zeros((len(lower), len(upper)), dtype=np.int64)
    for j, face in enumerate(upper):
        r = 0
        m = face
        while m:
            b = m & -m
            m ^= b
            r += 1
            sign = 1 if r % 2 == 1 else p - 1
            mat[index[face ^ b], j] = sign
    return mat


def homology_from_buckets(buckets: list[list[int]], p: int) -> dict[int, int]:
    """Reduced homology dimensions of a complex given by face buckets.

    Returns a sparse mapping degree -> dim with zero entries omitted; the
    void complex gives {}.
    """
    if not buckets:
        return {}
    f = [len(b) for b in buckets]
    top = len(buckets) - 1
    # ranks[c] = rank of the boundary map card-c faces -> card-(c-1) faces
    ranks = [0] * (top + 2)
    for c in range(1, top + 1):
        ranks[c] = _rank_mod_p(boundary_matrix(buckets[c - 1], buckets[c], p), p)
    dims: dict[int, int] = {}
    for c in range(top + 1):
        h = f[c] - ranks[c] - ranks[c + 1]
        if h:
            dims[c - 1] = h
    return dims


def reduced_homology(cx: SimplicialComplex, field: PrimeField | int = 2) -> dict[int, int]:
    """Reduced homology dimensions of the complex over GF(p), sparse by degree."""
    p = as_field(field).p
    if cx.is_void:
        return {}
    return homology_from_buckets(faces_by_cardinality(cx, (1 << cx.n) - 1), p)


def boundary_matrices(cx: SimplicialComplex, field: PrimeField | int = 2) -> list[np.ndarray]:
    """All boundary matrices of the complex, lowest dimension first."""
    p = as_field(field).p
    buckets = faces_by_cardinality(cx, (1 << cx.n) - 1)
    return [
        boundary_matrix(buckets[c - 1], buckets[c], p) for c in range(1, len(buckets))
    ]


def reduced_euler_char(cx: SimplicialComplex) -> int:
    """Alternating face-count sum including the empty face: sum (-1)^i f_i, i >= -1."""
    total = 0
    for j, count in enumerate(cx.f_vector()):
        total += count if j % 2 == 1 else -count
    return total


def h_vector(cx: SimplicialComplex, rank: int) -> tuple[int, ...]:
    """h-vector (h_0..h_rank) from the f-vector via sum f_{i-1} (t-1)^(rank-i).

    ``rank`` must be at least dim+1 (for a matroid complex it is the matroid
    rank, supplied by the caller).
    """
    f = cx.f_vector()
    if len(f) > rank + 1:
        raise ValueError(f"rank {rank} is smaller than the complex allows (dim {cx.dim()})")
    coeffs = [0] * (rank + 1)  # coefficient of t^j at index j
    for i in range(rank + 1):
        fi = f[i] if i < len(f) else 0
        if fi == 0:
            continue
        m = rank - i
        for j in range(m + 1):
            term = fi * comb(m, j)
            coeffs[j] += term if (m - j) % 2 == 0 else -term
    return tuple(coeffs[rank - i] for i in range(rank + 1))
