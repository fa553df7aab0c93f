from __future__ import annotations

from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from e6verify.linalg import (
    ExactMatrix,
    determinant,
    hermite_normal_form,
    integer_kernel,
    matmul,
    nullspace,
    rank,
    rref,
    smith_normal_form,
    transpose,
)

small = st.integers(min_value=-6, max_value=6)


def matrices(min_rows=1, max_rows=6, min_cols=1, max_cols=7):
    return st.integers(min_rows, max_rows).flatmap(
        lambda r: st.integers(min_cols, max_cols).flatmap(
            lambda c: st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r)
        )
    )


def square(max_n=6):
    return st.integers(1, max_n).flatmap(
        lambda n: st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n)
    )


@given(matrices())
def test_rank_matches_sympy(A):
    assert rank(A) == sympy.Matrix(A).rank()


@given(square())
def test_determinant_matches_sympy(A):
    assert determinant(A) == sympy.Matrix(A).det()


@given(matrices())
def test_rref_matches_sympy(A):
    R, pivots = rref(A)
    S, spiv = sympy.Matrix(A).rref()
    assert list(pivots) == list(spiv)
    nonzero = [row for row in R if any(row)]
    assert [[sympy.Rational(x.numerator, x.denominator) for x in row] for row in nonzero] == \
        S[: len(spiv), :].tolist()


@given(matrices())
def test_nullspace_is_a_basis_of_the_kernel(A):
    ncols = len(A[0])
    N = nullspace(A, ncols)
    assert len(N) == ncols - sympy.Matrix(A).rank()
    for v in N:
        assert all(sum(a * x for a, x in zip(row, v)) == 0 for row in A)
    if N:
        assert rank(N) == len(N)


@given(matrices())
def test_smith_form_matches_sympy(A):
    from sympy.matrices.normalforms import smith_normal_form as snf

    S = snf(sympy.Matrix(A), domain=sympy.ZZ)
    diag = [abs(S[i, i]) for i in range(min(S.shape)) if S[i, i] != 0]
    assert smith_normal_form(A) == diag


@given(matrices(max_rows=5, max_cols=8))
def test_integer_kernel_is_saturated(A):
    K = integer_kernel(A)
    n = len(A[0])
    assert len(K) == n - rank(A)
    for v in K:
        assert all(isinstance(x, int) for x in v)
        assert all(sum(a * x for a, x in zip(row, v)) == 0 for row in A)
    if K:
        # a saturated lattice has all elementary divisors equal to 1
        assert smith_normal_form(K) == [1] * len(K)


@given(matrices(max_rows=5, max_cols=6))
def test_hermite_form_is_a_unimodular_transform(A):
    H, U = hermite_normal_form(A)
    assert matmul(U, A) == H
    assert abs(determinant(U)) == 1


def test_exact_matrix_wraps_the_functions():
    M = ExactMatrix([[1, 2], [3, 4]])
    assert M.shape == (2, 2)
    assert M.det() == -2
    assert M.rank() == 2
    assert (M @ ExactMatrix(transpose(M.rows))).rows == [[5, 11], [11, 25]]
    assert ExactMatrix([[Fraction(1, 2), 1]]).nullspace() == [[-2, 1]]


def test_determinant_of_an_empty_matrix_is_one():
    assert determinant([]) == 1


def test_nullspace_of_no_equations_is_everything():
    assert len(nullspace([], 3)) == 3


def test_mismatched_rows_are_rejected():
    with pytest.raises(Exception):
        rank([[1, 2], [3]])
