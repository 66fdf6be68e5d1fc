"""Exact linear algebra kernel: ranks, kernels, solving, quotients."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from morphlie.errors import ShapeError, SubspaceViolation
from morphlie.linalg import (
    Matrix,
    complete_basis,
    determinant,
    inverse,
    is_invertible,
    kernel_basis,
    quotient_dim,
    rank,
    rat,
    rat_str,
    solve,
    solve_columns,
)

rationals = st.fractions(min_value=-6, max_value=6, max_denominator=4)


def small_matrix(rows: int, cols: int):
    return st.lists(rationals, min_size=rows * cols, max_size=rows * cols).map(
        lambda xs: Matrix(rows, cols, xs)
    )


matrices = st.tuples(st.integers(0, 4), st.integers(0, 4)).flatmap(
    lambda rc: small_matrix(rc[0], rc[1])
)


def test_rat_roundtrip():
    assert rat("3/4") == Fraction(3, 4)
    assert rat("-7") == Fraction(-7)
    assert rat(5) == Fraction(5)
    assert rat_str(Fraction(-3, 4)) == "-3/4"
    assert rat_str(Fraction(8, 2)) == "4"


def test_rat_rejects_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        rat("1/0")


def test_rank_of_rational_matrix():
    m = Matrix.from_rows([[rat("1/2"), 1], [rat("1/3"), 1]])
    assert rank(m) == 2
    singular = Matrix.from_rows([[1, 2], [2, 4]])
    assert rank(singular) == 1


def test_kernel_of_one_by_two():
    m = Matrix.from_rows([[1, -1]])
    k = kernel_basis(m)
    assert k.rows == 2 and k.cols == 1
    assert k.col(0) == [Fraction(1), Fraction(1)]


def test_kernel_of_zero_row_matrix_is_identity():
    k = kernel_basis(Matrix.zeros(0, 3))
    assert k == Matrix.identity(3)


def test_solve_returns_none_when_inconsistent():
    m = Matrix.from_rows([[1, 0], [1, 0]])
    b = Matrix.column([0, 1])
    assert solve(m, b) is None


def test_solve_exact():
    m = Matrix.from_rows([[2, 1], [1, 3]])
    b = Matrix.column([1, 0])
    x = solve(m, b)
    assert x is not None
    assert m * x == b
    assert x.col(0) == [Fraction(3, 5), Fraction(-1, 5)]


def test_solve_zero_dimensional():
    m = Matrix.zeros(0, 2)
    x = solve(m, Matrix.zeros(0, 1))
    assert x is not None and x.rows == 2


def test_quotient_dim_and_violation():
    z = Matrix.from_rows([[1, 0], [0, 1], [0, 0]])
    b = Matrix.from_rows([[1], [1], [0]])
    assert quotient_dim(z, b) == 1
    outside = Matrix.from_rows([[0], [0], [1]])
    with pytest.raises(SubspaceViolation):
        quotient_dim(z, outside)


def test_zero_dimensional_quotient():
    z = Matrix.zeros(3, 0)
    b = Matrix.zeros(3, 0)
    assert quotient_dim(z, b) == 0


def test_block_assembly():
    a = Matrix.identity(2)
    b = Matrix.zeros(2, 1)
    c = Matrix.zeros(1, 2)
    d = Matrix.from_rows([[5]])
    m = Matrix.block([[a, b], [c, d]])
    assert m.rows == 3 and m.cols == 3
    assert m[2, 2] == 5 and m[0, 0] == 1 and m[0, 2] == 0


def test_shape_errors():
    with pytest.raises(ShapeError):
        Matrix(2, 2, [1, 2, 3])
    with pytest.raises(ShapeError):
        Matrix.from_rows([[1, 2], [3]])
    with pytest.raises(ShapeError):
        Matrix.identity(2) * Matrix.zeros(3, 1)


def test_determinant_and_inverse():
    m = Matrix.from_rows([[1, 2], [3, 4]])
    assert determinant(m) == -2
    inv = inverse(m)
    assert m * inv == Matrix.identity(2)
    assert not is_invertible(Matrix.from_rows([[1, 2], [2, 4]]))


def test_complete_basis_prefers_low_indices():
    partial = Matrix.from_rows([[0], [0], [1]])
    full, chosen = complete_basis(partial)
    assert chosen == [0, 1]
    assert rank(full) == 3


@settings(max_examples=60, deadline=None)
@given(matrices)
def test_rank_nullity(m):
    assert rank(m) + kernel_basis(m).cols == m.cols


@settings(max_examples=60, deadline=None)
@given(matrices)
def test_kernel_columns_are_killed(m):
    k = kernel_basis(m)
    if k.cols:
        assert (m * k).is_zero()
    assert rank(k) == k.cols


@settings(max_examples=60, deadline=None)
@given(matrices)
def test_rank_invariant_under_transpose(m):
    assert rank(m) == rank(m.transpose())


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: st.tuples(small_matrix(n, n), small_matrix(n, 1))))
def test_solve_is_exact_when_it_succeeds(mb):
    m, b = mb
    x = solve(m, b)
    if x is not None:
        assert m * x == b


@settings(max_examples=40, deadline=None)
@given(matrices)
def test_quotient_by_self_is_zero(m):
    assert quotient_dim(m, m) == 0


def test_solve_columns_multi():
    m = Matrix.from_rows([[1, 1], [0, 1]])
    b = Matrix.from_rows([[2, 0], [1, 1]])
    x = solve_columns(m, b)
    assert x is not None and m * x == b
