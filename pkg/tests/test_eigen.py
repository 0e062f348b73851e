"""Tests for the tridiagonal eigen layer."""

import numpy as np
import pytest

from src.eigen import (
    TridiagonalSymmetric,
    char_poly,
    char_poly_scaled,
    sturm_count,
    tridiag_eigenvalues,
    tridiagonalize,
)
from src.errors import EmptyMatrixError


@pytest.fixture
def small_matrix():
    return TridiagonalSymmetric(diag=[4.0, 1.0, -2.0, 3.0, 0.5], offdiag=[1.0, 0.3, 2.0, -0.7])


# ---------------------------------------------------------------------------
# TridiagonalSymmetric
# ---------------------------------------------------------------------------

class TestTridiagonalSymmetric:

    def test_dense_is_symmetric(self, small_matrix):
        dense = small_matrix.to_dense()
        assert np.array_equal(dense, dense.T)
        assert dense[2, 3] == 2.0

    def test_offdiag_length_checked(self):
        with pytest.raises(ValueError):
            TridiagonalSymmetric(diag=[1.0, 2.0], offdiag=[1.0, 2.0])

    def test_arrays_are_read_only(self, small_matrix):
        with pytest.raises(ValueError):
            small_matrix.diag[0] = 7.0


# ---------------------------------------------------------------------------
# tridiag_eigenvalues
# ---------------------------------------------------------------------------

class TestEigenvalues:

    def test_matches_dense_solver(self, small_matrix):
        expected = np.linalg.eigvalsh(small_matrix.to_dense())
        got = tridiag_eigenvalues(small_matrix).values
        assert np.allclose(got, expected, atol=1e-12)

    def test_sorted_ascending(self, small_matrix):
        values = tridiag_eigenvalues(small_matrix).values
        assert np.all(np.diff(values) >= 0)

    def test_single_entry(self):
        result = tridiag_eigenvalues(TridiagonalSymmetric(diag=[3.5], offdiag=[]), vectors=True)
        assert result.values.tolist() == [3.5]
        assert result.vectors.tolist() == [[1.0]]

    def test_empty_raises(self):
        with pytest.raises(EmptyMatrixError):
            tridiag_eigenvalues(TridiagonalSymmetric(diag=[], offdiag=[]))

    def test_vectors_orthonormal(self, small_matrix):
        result = tridiag_eigenvalues(small_matrix, vectors=True)
        V = result.vectors
        assert np.allclose(V.T @ V, np.eye(5), atol=1e-12)
        dense = small_matrix.to_dense()
        assert np.allclose(dense @ V, V * result.values, atol=1e-10)

    def test_owners_follow_diagonal(self):
        T = TridiagonalSymmetric(diag=[5.0, 1.0, 3.0], offdiag=[1e-3, 1e-3])
        result = tridiag_eigenvalues(T, vectors=True)
        # ascending values 1, 3, 5 sit on basis indices 1, 2, 0
        assert result.owners().tolist() == [2, 0, 1]
        assert result.values[result.owners()] == pytest.approx([5.0, 1.0, 3.0], abs=1e-5)

    def test_owners_need_vectors(self, small_matrix):
        with pytest.raises(ValueError):
            tridiag_eigenvalues(small_matrix).owners()


# ---------------------------------------------------------------------------
# Sturm counts and determinants
# ---------------------------------------------------------------------------

class TestSturmAndDeterminant:

    def test_sturm_count_between_eigenvalues(self, small_matrix):
        values = tridiag_eigenvalues(small_matrix).values
        assert sturm_count(small_matrix, values[0] - 1.0) == 0
        for k in range(4):
            mid = 0.5 * (values[k] + values[k + 1])
            assert sturm_count(small_matrix, mid) == k + 1
        assert sturm_count(small_matrix, values[-1] + 1.0) == 5

    def test_char_poly_matches_dense_determinant(self, small_matrix):
        dense = small_matrix.to_dense()
        for y in (-3.0, 0.0, 0.7, 6.0):
            expected = np.linalg.det(dense - y * np.eye(5))
            assert char_poly(small_matrix, y) == pytest.approx(expected, rel=1e-10)

    def test_char_poly_changes_sign_across_each_eigenvalue(self, small_matrix):
        values = tridiag_eigenvalues(small_matrix).values
        for v in values:
            left = char_poly(small_matrix, v - 1e-6)
            right = char_poly(small_matrix, v + 1e-6)
            assert left * right < 0

    def test_scaled_form_survives_overflow(self):
        n = 400
        T = TridiagonalSymmetric(diag=np.full(n, 1e3), offdiag=np.zeros(n - 1))
        sign, log_abs = char_poly_scaled(T, 0.0)
        assert sign == 1.0
        assert log_abs == pytest.approx(n * np.log(1e3), rel=1e-12)


# ---------------------------------------------------------------------------
# tridiagonalize
# ---------------------------------------------------------------------------

class TestTridiagonalize:

    def test_spectrum_preserved(self):
        rng = np.random.default_rng(7)
        B = rng.standard_normal((8, 8))
        A = B + B.T
        T = tridiagonalize(A)
        assert T.size == 8
        assert np.allclose(tridiag_eigenvalues(T).values, np.linalg.eigvalsh(A), atol=1e-10)

    def test_rejects_non_square(self):
        with pytest.raises(ValueError):
            tridiagonalize(np.ones((2, 3)))
