"""Numerical rank decisions, null spaces, pivoted QR, and border form."""

import numpy as np
import pytest

from curveideal import (
    IllConditionedError,
    border_form,
    enumerate_monomials,
    evaluation_matrix,
    qrp,
    svd_nullspace,
)
from curveideal.numeric_linalg import DEFAULT_TOL


def test_default_tolerance_value():
    assert DEFAULT_TOL == 1e-8


def test_nullspace_of_diagonal_with_exact_zero():
    decision, K = svd_nullspace(np.array([[1.0, 0.0], [0.0, 0.0]]))
    assert decision.rank == 1
    assert decision.mode == "spectral-gap"
    assert K.shape == (2, 1)
    # kernel is the second coordinate axis, up to phase
    assert abs(abs(K[1, 0]) - 1.0) < 1e-12
    assert abs(K[0, 0]) < 1e-12


def test_nullspace_of_rank_one_ones_matrix():
    decision, K = svd_nullspace(np.array([[1.0, 1.0], [1.0, 1.0]]))
    assert decision.rank == 1
    v = K[:, 0]
    assert abs(abs(v[0]) - 1 / np.sqrt(2)) < 1e-12
    assert abs(v[0] + v[1]) < 1e-12


def test_nullspace_of_zero_matrix_is_everything():
    decision, K = svd_nullspace(np.zeros((3, 2)))
    assert decision.rank == 0
    assert K.shape == (2, 2)


def test_imposed_rank_overrides_the_gap_rule():
    A = np.diag([1.0, 0.5, 1e-12])
    spectral, _ = svd_nullspace(A)
    assert spectral.rank == 2
    imposed, K = svd_nullspace(A, rank_hint=1)
    assert imposed.rank == 1
    assert imposed.mode == "imposed"
    assert imposed.spectral_rank == 2
    assert K.shape == (3, 2)


def test_rank_hint_must_be_in_range():
    A = np.eye(2)
    with pytest.raises(ValueError):
        svd_nullspace(A, rank_hint=3)
    with pytest.raises(ValueError):
        svd_nullspace(A, rank_hint=-1)


def test_nullspace_rejects_non_finite_input():
    with pytest.raises(ValueError):
        svd_nullspace(np.array([[1.0, np.nan]]))


def test_tolerance_must_sit_inside_the_open_unit_interval():
    with pytest.raises(ValueError):
        svd_nullspace(np.eye(2), tol=0.0)
    with pytest.raises(ValueError):
        qrp(np.eye(2), tol=1.5)


def test_kernel_columns_are_orthonormal_and_annihilate():
    rng = np.random.default_rng(5)
    for _ in range(20):
        h, t = rng.integers(2, 7), rng.integers(2, 7)
        A = rng.normal(size=(h, t)) @ np.diag(rng.uniform(0, 1, size=t))
        # force some rank deficiency
        A[:, -1] = A[:, 0]
        decision, K = svd_nullspace(A)
        nullity = t - decision.rank
        assert K.shape == (t, nullity)
        if nullity:
            gram = K.conj().T @ K
            assert np.allclose(gram, np.eye(nullity), atol=1e-12)
            assert np.linalg.norm(A @ K, 2) <= 1e-10 * max(1.0, np.linalg.norm(A, 2))


def test_singular_values_are_reported_descending():
    rng = np.random.default_rng(8)
    A = rng.normal(size=(5, 4))
    decision, _ = svd_nullspace(A)
    sv = decision.singular_values
    assert all(a >= b for a, b in zip(sv, sv[1:]))
    assert len(sv) == 4


def test_sextic_cubic_evaluation_has_rank_sixteen(sextic_points):
    A = evaluation_matrix(sextic_points, enumerate_monomials(3, 3))
    decision, K = svd_nullspace(A)
    assert A.shape == (31, 20)
    assert decision.rank == 16
    assert K.shape == (20, 4)


def test_qrp_of_identity_is_trivial():
    Q, R, perm, decision = qrp(np.eye(3))
    assert decision.rank == 3
    assert perm == (0, 1, 2)
    assert np.allclose(Q @ R, np.eye(3))


def test_qrp_of_zero_matrix_has_rank_zero():
    _, _, _, decision = qrp(np.zeros((2, 3)))
    assert decision.rank == 0


def test_qrp_reconstructs_the_permuted_matrix():
    rng = np.random.default_rng(21)
    for _ in range(15):
        A = rng.normal(size=(rng.integers(2, 6), rng.integers(2, 6)))
        Q, R, perm, decision = qrp(A)
        assert np.allclose(A[:, list(perm)], Q @ R, atol=1e-10)
        diag = np.abs(np.diag(R))
        assert all(a >= b - 1e-12 for a, b in zip(diag, diag[1:]))
        assert decision.rank == np.linalg.matrix_rank(A, tol=1e-10)


def test_qrp_on_sextic_kernel_selects_the_border_cubics(sextic_points):
    S3 = enumerate_monomials(3, 3)
    A = evaluation_matrix(sextic_points, S3)
    _, K = svd_nullspace(A)
    _, _, perm, _ = qrp(K.T)
    chosen = {S3[j].exponents for j in perm[:4]}
    assert chosen == {(1, 0, 2, 0), (1, 1, 0, 1), (0, 2, 0, 1), (0, 0, 2, 1)}


def test_border_form_fixes_unit_pivots():
    R = np.hstack([np.eye(2), np.zeros((2, 2))])
    F = border_form(R[:, :2], R)
    assert np.allclose(F, R)
    F2 = border_form(np.array([[2.0]]), np.array([[2.0, 4.0]]))
    assert np.allclose(F2, [[1.0, 2.0]])


def test_border_form_rejects_ill_conditioned_pivots():
    R1 = np.diag([1.0, 1e-12])
    R = np.hstack([R1, np.ones((2, 1))])
    with pytest.raises(IllConditionedError):
        border_form(R1, R)


def test_border_form_of_sextic_cubics_carries_known_ratio(sextic_points):
    S3 = enumerate_monomials(3, 3)
    A = evaluation_matrix(sextic_points, S3)
    _, K = svd_nullspace(A)
    _, R, perm, _ = qrp(K.T)
    F = border_form(R[:, :4], R)
    cols = {S3[j].exponents: 4 + i for i, j in enumerate(perm[4:])}
    rows = {S3[j].exponents: i for i, j in enumerate(perm[:4])}
    got = F[rows[(1, 0, 2, 0)], cols[(0, 1, 2, 0)]]
    assert abs(got - 0.0666666666) < 1e-8
