import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from preproj.exactlin import (
    GF,
    QQ,
    Matrix,
    gaussian_binomial,
    hstack,
    rref_cells,
    rref_cells_raw,
    vstack,
)


def test_rational_normalization():
    # stdlib Fraction supplies the normalized-rational contract
    assert Fraction(2, 4) == Fraction(1, 2)
    x = Fraction(1, -2)
    assert x.denominator == 2 and x.numerator == -1
    with pytest.raises(ZeroDivisionError):
        Fraction(1, 0)


def test_field_coercion():
    f5 = GF(5)
    assert f5.coerce(7) == 2
    assert f5.coerce(Fraction(1, 2)) == 3  # 1/2 = 3 mod 5
    assert GF(5) is f5  # interned
    with pytest.raises(ValueError):
        GF(6)
    with pytest.raises(ZeroDivisionError):
        f5.coerce(Fraction(1, 5))


def test_matrix_product_and_shapes():
    a = Matrix(QQ, [[1, 2], [3, 4]])
    b = Matrix(QQ, [[0, 1], [1, 0]])
    assert (a * b).entries == ((2, 1), (4, 3))
    with pytest.raises(ValueError):
        a * Matrix(QQ, [[1, 2, 3]])
    with pytest.raises(ValueError):
        a * Matrix(GF(2), [[1, 0], [0, 1]])


def test_rank_and_kernel_qq():
    m = Matrix(QQ, [[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    assert m.rank() == 2
    ker = m.kernel_basis()
    assert ker.nrows == 1
    for row in ker.entries:
        assert m.apply(row) == (0,) * 3


def test_rank_mod_p_can_drop():
    m = Matrix(QQ, [[2, 0], [0, 1]])
    assert m.rank() == 2
    assert m.reduce_mod(2).rank() == 1


def test_rref_is_canonical():
    m = Matrix(GF(3), [[1, 2, 0], [2, 1, 1], [0, 0, 1]])
    r, pivots = m.rref()
    r2, pivots2 = r.rref()
    assert r == r2 and pivots == pivots2


def test_solve_and_inverse():
    m = Matrix(QQ, [[2, 1], [1, 1]])
    x = m.solve([3, 2])
    assert x == (Fraction(1), Fraction(1))
    inv = m.inverse()
    assert m * inv == Matrix.identity(QQ, 2)
    singular = Matrix(QQ, [[1, 1], [1, 1]])
    assert singular.solve([0, 1]) is None
    with pytest.raises(ValueError):
        singular.inverse()


def test_stacking():
    a = Matrix(QQ, [[1, 2]])
    b = Matrix(QQ, [[3, 4]])
    assert vstack(a, b).entries == ((1, 2), (3, 4))
    assert hstack(a, b).entries == ((1, 2, 3, 4),)


def test_gaussian_binomial_values():
    assert gaussian_binomial(4, 2, 3) == 130
    assert gaussian_binomial(3, 1, 2) == 7
    assert gaussian_binomial(5, 0, 7) == 1
    assert gaussian_binomial(2, 3, 2) == 0


def test_rref_cells_count_matches_gaussian_binomial():
    assert sum(1 for _ in rref_cells(2, 4, GF(3))) == 130
    for n, k, p in [(3, 1, 2), (4, 2, 2), (3, 2, 3), (4, 1, 5)]:
        assert sum(1 for _ in rref_cells(k, n, GF(p))) == gaussian_binomial(n, k, p)


def _all_subspaces_bruteforce(n, k, p):
    """Independent oracle: distinct row spans over all k-tuples of vectors."""
    vectors = list(itertools.product(range(p), repeat=n))
    spans = set()
    for combo in itertools.combinations(vectors[1:], k):
        m = Matrix(GF(p), combo)
        if m.rank() != k:
            continue
        span = frozenset(
            tuple(sum(c * v for c, v in zip(coeffs, col)) % p for col in zip(*combo))
            for coeffs in itertools.product(range(p), repeat=k)
        )
        spans.add(span)
    return len(spans)


@pytest.mark.parametrize("n,k,p", [(3, 1, 2), (3, 2, 2), (4, 2, 2), (3, 2, 3)])
def test_rref_cells_against_bruteforce_spans(n, k, p):
    assert sum(1 for _ in rref_cells_raw(k, n, p)) == _all_subspaces_bruteforce(n, k, p)


def test_rref_cells_are_distinct_rref_matrices():
    seen = set()
    for rows in rref_cells_raw(2, 4, 2):
        assert rows not in seen
        seen.add(rows)
        m = Matrix(GF(2), rows)
        assert m.rank() == 2
        r, _ = m.rref()
        assert r == m


small_entries = st.integers(min_value=-6, max_value=6)


@st.composite
def qq_matrices(draw):
    nrows = draw(st.integers(min_value=1, max_value=4))
    ncols = draw(st.integers(min_value=1, max_value=4))
    rows = [[draw(small_entries) for _ in range(ncols)] for _ in range(nrows)]
    return Matrix(QQ, rows)


@settings(max_examples=60, deadline=None)
@given(qq_matrices())
def test_rank_transpose_invariant(m):
    assert m.rank() == m.transpose().rank()


@settings(max_examples=60, deadline=None)
@given(qq_matrices())
def test_rank_nullity(m):
    assert m.rank() + m.kernel_basis().nrows == m.ncols


@settings(max_examples=60, deadline=None)
@given(qq_matrices(), st.sampled_from([2, 3, 5, 7]))
def test_rank_never_rises_mod_p(m, p):
    assert m.reduce_mod(p).rank() <= m.rank()


@settings(max_examples=40, deadline=None)
@given(qq_matrices())
def test_kernel_rows_annihilated(m):
    ker = m.kernel_basis()
    for row in ker.entries:
        assert all(x == 0 for x in m.apply(row))
