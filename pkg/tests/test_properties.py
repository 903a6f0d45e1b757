"""Hypothesis property checks on random matrix matroids (kept small and fast;
the seeded 200-matroid sweep lives in test_acceptance)."""

from hypothesis import given, settings, strategies as st

from ghw.betti import betti_fine_hochster, betti_fine_matroid
from ghw.finfield import FieldMatrix, PrimeField
from ghw.matroid import Matroid, nonredundancy_degree
from ghw.simplicial import h_vector, independence_complex
from ghw.weights import (
    support_size,
    wei_duality_check,
    weights_bruteforce,
    weights_from_betti,
    whitney_polynomial,
)


@st.composite
def matrix_matroids(draw, max_n=5):
    p = draw(st.sampled_from([2, 3, 5]))
    n = draw(st.integers(min_value=1, max_value=max_n))
    m = draw(st.integers(min_value=1, max_value=n))
    entries = draw(
        st.lists(
            st.lists(st.integers(0, p - 1), min_size=n, max_size=n),
            min_size=m,
            max_size=m,
        )
    )
    return Matroid.from_matrix(FieldMatrix(PrimeField(p), entries))


@settings(max_examples=40, deadline=None)
@given(matrix_matroids())
def test_rank_axioms(M):
    size = 1 << M.n
    for a in range(size):
        ra = M.rank(a)
        assert 0 <= ra <= a.bit_count()
        for x in range(M.n):
            assert ra <= M.rank(a | (1 << x)) <= ra + 1
    for a in range(size):
        for b in range(size):
            assert M.rank(a | b) + M.rank(a & b) <= M.rank(a) + M.rank(b)


@settings(max_examples=30, deadline=None)
@given(matrix_matroids())
def test_fast_path_matches_hochster_all_fields(M):
    fast = betti_fine_matroid(M)
    cx = independence_complex(M)
    for p in (2, 3, 5):
        assert betti_fine_hochster(cx, p) == fast


@settings(max_examples=40, deadline=None)
@given(matrix_matroids())
def test_weights_match_bruteforce(M):
    k = M.n - M.rank(M.full)
    table = betti_fine_matroid(M)
    assert weights_from_betti(table, k) == weights_bruteforce(M)
    assert table.max_index() == k
    if k:
        assert weights_bruteforce(M)[-1] == support_size(M)


@settings(max_examples=30, deadline=None)
@given(matrix_matroids())
def test_nonredundancy_degree_is_nullity(M):
    for sigma in range(1 << M.n):
        assert nonredundancy_degree(M, sigma) == M.nullity(sigma)


@settings(max_examples=30, deadline=None)
@given(matrix_matroids())
def test_dual_involution_and_reconstruction(M):
    DD = M.dual().dual()
    assert all(DD.rank(m) == M.rank(m) for m in range(1 << M.n))
    from_b = Matroid.from_bases(M.n, [tuple(e for e in range(M.n) if b >> e & 1) for b in M.bases()])
    assert all(from_b.rank(m) == M.rank(m) for m in range(1 << M.n))
    if M.circuits():
        from_c = Matroid.from_circuits(
            M.n, [tuple(e for e in range(M.n) if c >> e & 1) for c in M.circuits()]
        )
        assert all(from_c.rank(m) == M.rank(m) for m in range(1 << M.n))


@settings(max_examples=30, deadline=None)
@given(matrix_matroids())
def test_wei_duality_random(M):
    assert wei_duality_check(M) is not False


@settings(max_examples=25, deadline=None)
@given(matrix_matroids())
def test_alexander_dual_resolution_is_linear(M):
    dual_cx = independence_complex(M).alexander_dual()
    table = betti_fine_hochster(dual_cx, 2)
    rows = {d - i for (i, d) in table.graded() if i >= 1}
    r = M.rank(M.full)
    if M.n - r >= 1:
        # generators sit in degree n - r, so the one diagram row is n - r - 1
        assert rows == {M.n - r - 1}
    else:
        assert rows == set()


@settings(max_examples=30, deadline=None)
@given(matrix_matroids())
def test_top_degrees_strictly_increasing(M):
    table = betti_fine_matroid(M)
    tops = [table.max_degree(i) for i in range(1, table.max_index() + 1)]
    assert all(a < b for a, b in zip(tops, tops[1:]))


@settings(max_examples=30, deadline=None)
@given(matrix_matroids())
def test_levelness_identity(M):
    r = M.rank(M.full)
    k = M.n - r
    table = betti_fine_matroid(M)
    h = h_vector(independence_complex(M), r)
    s = max(i for i, v in enumerate(h) if v)
    d_top = weights_from_betti(table, k)[-1] if k else 0
    assert table.graded()[(k, d_top)] == h[s]


@settings(max_examples=40, deadline=None)
@given(matrix_matroids())
def test_whitney_mass_and_f_vector(M):
    w = whitney_polynomial(M)
    assert sum(w.values()) == 2**M.n
    r = M.rank(M.full)
    f = independence_complex(M).f_vector()
    x_part = {ex: c for (ex, ey), c in w.items() if ey == 0}
    assert x_part == {r - j: f[j] for j in range(len(f)) if f[j]}
