from fractions import Fraction

import gmpy2
import pytest
import sympy
from hypothesis import given, strategies as st

from waringhf.scalars import (QQ, ExactMatrix, FieldMismatchError, GF, field_from_spec, format_scalar, kernel,
                              rank, rref, solve)

F = GF(32003)


def mat(field, rows):
    return ExactMatrix.from_rows(field, rows)


def test_rationals_are_reduced():
    a = QQ("6/-4")
    assert a == gmpy2.mpq(-3, 2)
    assert a.denominator > 0
    assert format_scalar(QQ, a) == "-3/2"


def test_prime_residues_in_range():
    assert F(-1) == 32002
    assert F("1/2") * 2 % 32003 == 1
    assert format_scalar(F, F(-5)) == "-5"


def test_field_from_spec():
    assert field_from_spec("qq") == QQ
    assert field_from_spec("fp:101") == GF(101)
    with pytest.raises(ValueError):
        field_from_spec("fp:100")
    with pytest.raises(ValueError):
        field_from_spec("zz")


def test_identity_rank():
    r = rref(ExactMatrix.identity(QQ, 3))
    assert r.rank == 3 and r.kernel == []


def test_zero_matrix():
    r = rref(ExactMatrix.zeros(QQ, 2, 3))
    assert r.rank == 0 and len(r.kernel) == 3


def test_rank_one_example():
    r = rref(mat(QQ, [[1, 2, 3], [2, 4, 6]]))
    assert r.rank == 1
    assert len(r.kernel) == 2
    # canonical basis: free columns 1 and 2, pivot entry of each vector normalized
    assert r.kernel == [(QQ(-2), QQ(1), QQ(0)), (QQ(-3), QQ(0), QQ(1))]


def test_field_mismatch():
    with pytest.raises(FieldMismatchError):
        mat(QQ, [[1]]) @ mat(F, [[1]])


def test_solve():
    m = mat(QQ, [[1, 1], [1, -1]])
    assert solve(m, [2, 0]) == [1, 1]
    assert solve(mat(QQ, [[1, 1], [2, 2]]), [1, 3]) is None


small = st.lists(st.lists(st.integers(-5, 5), min_size=4, max_size=4), min_size=1, max_size=5)


@given(small)
def test_rank_matches_sympy(rows):
    assert rank(mat(QQ, rows)) == sympy.Matrix(rows).rank()


@given(small)
def test_rank_of_transpose(rows):
    m = mat(QQ, rows)
    assert rank(m) == rank(m.transpose())


@given(small, st.sampled_from([QQ, GF(7), F]))
def test_kernel_annihilates(rows, field):
    m = mat(field, rows)
    ker = kernel(m)
    assert rank(m) + len(ker) == m.cols
    for v in ker:
        prod = m @ ExactMatrix.from_rows(field, [[x] for x in v])
        assert all(row[0] == 0 for row in prod.to_rows())


@given(small, st.sampled_from([QQ, GF(7)]))
def test_rref_idempotent(rows, field):
    r = rref(mat(field, rows))
    again = rref(r.matrix)
    assert again.matrix.to_rows()[:again.rank] == r.matrix.to_rows()[:r.rank]
    assert again.pivots == r.pivots


@given(small)
def test_rref_matches_sympy(rows):
    ours = rref(mat(QQ, rows))
    theirs, piv = sympy.Matrix(rows).rref()
    assert ours.pivots == tuple(piv)
    for i in range(ours.rank):
        assert [Fraction(int(x.numerator), int(x.denominator)) for x in ours.matrix.row(i)] == \
               [Fraction(int(sympy.fraction(x)[0]), int(sympy.fraction(x)[1])) for x in theirs.row(i)]


rational_rows = st.lists(st.lists(st.fractions(min_value=-20, max_value=20, max_denominator=7), min_size=5, max_size=5),
                         min_size=1, max_size=6)


@given(rational_rows)
def test_fraction_free_rref_matches_generic(rows):
    from waringhf.scalars import _rref_rows_generic, _rref_rows_rational
    qrows = [[gmpy2.mpq(q.numerator, q.denominator) for q in r] for r in rows]
    red, piv = _rref_rows_rational(qrows, 5)
    ref, rpiv = _rref_rows_generic(qrows, 5, 0)
    assert piv == rpiv
    assert [list(r) for r in red[:len(piv)]] == [list(r) for r in ref[:len(rpiv)]]


@given(st.lists(st.lists(st.integers(-4, 4), min_size=3, max_size=3), min_size=7, max_size=20),
       st.integers(0, 2))
def test_tall_kernel_matches_rref(rows, rank_cap):
    from waringhf.scalars import tall_kernel
    # low-rank tall matrices: rows are combinations of a few generators
    gens = rows[:rank_cap + 1]
    tall = [[sum(c * g[j] for c, g in zip(r, gens)) for j in range(3)] for r in rows]
    m = ExactMatrix.from_rows(QQ, [[x + x * k for x in r] for k, r in enumerate(tall)], 3)
    assert tall_kernel(m) == kernel(m)
