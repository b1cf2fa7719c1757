"""Exact rational elimination: reduced echelon form, kernels, ranks."""

import random
from fractions import Fraction

import pytest

from curveideal import evaluation_matrix, kernel_exact, rank, rre
from curveideal.rational_linalg import ExactMatrix, column_reduce_to_echelon
from oracles import exact_span_equal

F = Fraction


def random_matrix(rng, rows, cols, span=9):
    return ExactMatrix(
        [[F(rng.randint(-span, span)) for _ in range(cols)] for _ in range(rows)]
    )


def test_matrix_entries_stay_in_lowest_terms():
    A = ExactMatrix([["2/4", F(6, 8)], [1, 0]])
    assert A.at(0, 0) == F(1, 2)
    assert A.at(0, 1) == F(3, 4)


def test_matrix_shape_validation():
    with pytest.raises(ValueError):
        ExactMatrix([[1, 2], [3]])
    with pytest.raises(ValueError):
        ExactMatrix([])
    with pytest.raises(TypeError):
        ExactMatrix([[0.5]])
    empty = ExactMatrix([], cols=4)
    assert empty.rows == 0 and empty.cols == 4


def test_from_columns_and_transpose():
    A = ExactMatrix.from_columns([[1, 2], [3, 4]])
    assert A.entries == ((F(1), F(3)), (F(2), F(4)))
    assert A.transpose().entries == ((F(1), F(2)), (F(3), F(4)))
    assert A.column(1) == (F(3), F(4))
    assert A.row(0) == (F(1), F(3))


def test_rre_of_identity_is_identity():
    I3 = ExactMatrix.identity(3)
    result = rre(I3)
    assert result.matrix.entries == I3.entries
    assert result.pivot_columns == (0, 1, 2)


def test_rre_collapses_dependent_rows():
    result = rre(ExactMatrix([[1, 2], [2, 4]]))
    assert result.matrix.entries == ((F(1), F(2)),)
    assert result.pivot_columns == (0,)


def test_rre_clears_above_and_below_pivots():
    result = rre(ExactMatrix([[0, 1, 1], [0, 0, 2]]))
    assert result.matrix.entries == ((F(0), F(1), F(0)), (F(0), F(0), F(1)))
    assert result.pivot_columns == (1, 2)


def test_rre_of_zero_matrix_has_no_rows():
    result = rre(ExactMatrix([[0, 0], [0, 0]]))
    assert result.matrix.rows == 0
    assert result.pivot_columns == ()


def test_rre_is_idempotent_on_random_matrices():
    rng = random.Random(7)
    for _ in range(25):
        A = random_matrix(rng, rng.randint(1, 5), rng.randint(1, 6))
        E = rre(A)
        again = rre(E.matrix)
        assert again.matrix.entries == E.matrix.entries
        assert again.pivot_columns == E.pivot_columns


def test_rre_preserves_the_row_space():
    rng = random.Random(11)
    for _ in range(25):
        A = random_matrix(rng, rng.randint(1, 5), rng.randint(1, 6))
        E = rre(A).matrix
        stacked = ExactMatrix(list(A.entries) + list(E.entries), cols=A.cols)
        assert rank(stacked) == rank(A) == E.rows


def test_rre_pivot_entries_are_exactly_one():
    rng = random.Random(13)
    for _ in range(10):
        A = random_matrix(rng, 4, 6)
        E = rre(A)
        for i, j in enumerate(E.pivot_columns):
            assert E.matrix.at(i, j) == 1
            # pivot column is otherwise zero
            assert all(E.matrix.at(r, j) == 0 for r in range(E.matrix.rows) if r != i)


def test_kernel_of_identity_is_empty():
    assert kernel_exact(ExactMatrix.identity(4)) == []


def test_kernel_of_rank_one_row():
    assert kernel_exact(ExactMatrix([[1, 1]])) == [[F(-1), F(1)]]


def test_kernel_vectors_satisfy_the_system_exactly():
    rng = random.Random(17)
    for _ in range(25):
        A = random_matrix(rng, rng.randint(1, 4), rng.randint(1, 6))
        K = kernel_exact(A)
        assert len(K) == A.cols - rank(A)
        for v in K:
            for i in range(A.rows):
                assert sum(A.at(i, j) * v[j] for j in range(A.cols)) == 0


def test_kernel_has_identity_pattern_on_free_columns():
    A = ExactMatrix([[1, 2, 3], [0, 0, 1]])
    K = kernel_exact(A)
    assert len(K) == 1
    assert K[0] == [F(-2), F(1), F(0)]


def test_kernel_of_twisted_cubic_evaluation_spans_the_quadrics(twisted_points):
    from curveideal import HomogeneousPolynomial, Monomial, enumerate_monomials

    S = enumerate_monomials(3, 2)
    A = evaluation_matrix(twisted_points, S)
    K = kernel_exact(A)
    assert len(K) == 3
    found = [
        HomogeneousPolynomial({m: c for m, c in zip(S, v) if c != 0}) for v in K
    ]
    classical = [
        HomogeneousPolynomial({Monomial((1, 0, 1, 0)): F(1), Monomial((0, 2, 0, 0)): F(-1)}),
        HomogeneousPolynomial({Monomial((0, 1, 0, 1)): F(1), Monomial((0, 0, 2, 0)): F(-1)}),
        HomogeneousPolynomial({Monomial((1, 0, 0, 1)): F(1), Monomial((0, 1, 1, 0)): F(-1)}),
    ]
    assert exact_span_equal(found, classical, S)


def test_column_reduce_zero_matrix():
    reduced, pivot_rows = column_reduce_to_echelon(ExactMatrix([[0, 0], [0, 0]]))
    assert pivot_rows == ()
    assert all(x == 0 for row in reduced.entries for x in row)


def test_column_reduce_identity_keeps_all_rows():
    reduced, pivot_rows = column_reduce_to_echelon(ExactMatrix.identity(3))
    assert pivot_rows == (0, 1, 2)


def test_column_reduce_collapses_equal_columns():
    reduced, pivot_rows = column_reduce_to_echelon(ExactMatrix([[1, 1], [1, 1]]))
    assert pivot_rows == (0,)
    assert reduced.column(1) == (F(0), F(0))


def test_column_reduce_preserves_column_space():
    rng = random.Random(19)
    for _ in range(20):
        A = random_matrix(rng, rng.randint(1, 5), rng.randint(1, 5))
        reduced, pivot_rows = column_reduce_to_echelon(A)
        At = A.transpose()
        Rt = reduced.transpose()
        stacked = ExactMatrix(list(At.entries) + list(Rt.entries), cols=A.rows)
        assert rank(stacked) == rank(At)
        assert len(pivot_rows) == rank(A)


def test_rank_examples():
    assert rank(ExactMatrix.identity(5)) == 5
    assert rank(ExactMatrix([[1, 2], [2, 4]])) == 1
    assert rank(ExactMatrix([[0, 0]])) == 0
