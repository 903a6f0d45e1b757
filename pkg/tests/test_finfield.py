import itertools
import random

import pytest
from hypothesis import given, strategies as st

from ghw.finfield import FieldMatrix, PrimeField, matrix_rank


H1_ROWS = [[1, 0, 0, 1, 0, 1], [0, 1, 0, 1, 1, 0], [0, 0, 1, 1, 1, 0]]


@pytest.mark.parametrize("p", [0, 1, 4, 6, 9, 15, 21, -3])
def test_composite_modulus_rejected(p):
    with pytest.raises(ValueError, match="not prime"):
        PrimeField(p)


def test_field_ops_examples():
    assert PrimeField(5).inv(2) == 3
    assert PrimeField(2).add(1, 1) == 0
    assert PrimeField(5).mul(3, 4) == 2
    assert PrimeField(7).neg(3) == 4


def test_inverse_of_zero():
    with pytest.raises(ZeroDivisionError, match="zero division"):
        PrimeField(5).inv(0)


@given(st.sampled_from([2, 3, 5, 7, 11, 13]), st.integers(min_value=1, max_value=10**6))
def test_inverse_property(p, a):
    field = PrimeField(p)
    a = a % p
    if a == 0:
        a = 1
    assert field.mul(field.inv(a), a) == 1


def test_matrix_construction():
    m = FieldMatrix(PrimeField(3), [[4, -1], [0, 5]])
    assert m.entries == ((1, 2), (0, 2))
    with pytest.raises(ValueError, match="inconsistent"):
        FieldMatrix(PrimeField(2), [[1, 0], [1]])
    with pytest.raises(ValueError, match="column count"):
        FieldMatrix(PrimeField(2), [])
    empty = FieldMatrix(PrimeField(2), [], cols=3)
    assert matrix_rank(empty) == 0


def test_rank_worked_example_columns():
    h1 = FieldMatrix(PrimeField(2), H1_ROWS)
    # columns given 1-based in the source example
    assert matrix_rank(h1, [0, 3, 4]) == 2
    assert matrix_rank(h1, [0, 1, 2]) == 3
    assert matrix_rank(h1, []) == 0
    assert matrix_rank(h1) == 3


def test_rank_out_of_range():
    h1 = FieldMatrix(PrimeField(2), H1_ROWS)
    with pytest.raises(ValueError, match="out of range"):
        matrix_rank(h1, [6])
    with pytest.raises(ValueError, match="out of range"):
        matrix_rank(h1, [-1])


def _random_matrix(rng, p, rows, cols):
    return FieldMatrix(PrimeField(p), [[rng.randrange(p) for _ in range(cols)] for _ in range(rows)])


def test_rank_monotone_and_submodular_exhaustive():
    rng = random.Random(7)
    for p, rows, cols in [(2, 3, 5), (3, 2, 5), (5, 3, 4), (2, 4, 8)]:
        m = _random_matrix(rng, p, rows, cols)
        ranks = {}
        for size in range(cols + 1):
            for sub in itertools.combinations(range(cols), size):
                ranks[frozenset(sub)] = matrix_rank(m, sub)
        subsets = list(ranks)
        for a in subsets:
            assert ranks[a] <= min(len(a), rows)
            for b in subsets:
                if a <= b:
                    assert ranks[a] <= ranks[b]
        for a in subsets:
            for b in subsets:
                assert ranks[a | b] + ranks[a & b] <= ranks[a] + ranks[b]


@given(
    st.sampled_from([2, 3, 5]),
    st.integers(min_value=1, max_value=4),
    st.integers(min_value=1, max_value=5),
    st.data(),
)
def test_rank_le_gauss_oracle(p, rows, cols, data):
    # cross-check elimination against brute-force row-span counting
    entries = data.draw(
        st.lists(
            st.lists(st.integers(0, p - 1), min_size=cols, max_size=cols),
            min_size=rows,
            max_size=rows,
        )
    )
    m = FieldMatrix(PrimeField(p), entries)
    span = set()
    for coeffs in itertools.product(range(p), repeat=rows):
        v = tuple(sum(c * row[j] for c, row in zip(coeffs, entries)) % p for j in range(cols))
        span.add(v)
    rank = matrix_rank(m)
    assert p**rank == len(span)
