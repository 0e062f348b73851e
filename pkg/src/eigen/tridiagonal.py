"""Symmetric tridiagonal matrices and their spectra.

Eigenvalues come from LAPACK's Sturm-sequence bisection (``stebz``), which is
deterministic and returns them already sorted. Eigenvectors, when requested,
come from ``stemr``.
"""

from dataclasses import dataclass

import numpy as np
from scipy.linalg import eigh_tridiagonal, hessenberg

from src.errors import EmptyMatrixError


@dataclass(frozen=True)
class TridiagonalSymmetric:
    """T[n, n] = diag[n], T[n, n+1] = T[n+1, n] = offdiag[n]."""

    diag: np.ndarray
    offdiag: np.ndarray

    def __post_init__(self):
        diag = np.array(self.diag, dtype=float).reshape(-1)
        offdiag = np.array(self.offdiag, dtype=float).reshape(-1)
        if diag.size and offdiag.size != diag.size - 1:
            raise ValueError(
                f"offdiag must have {diag.size - 1} entries, got {offdiag.size}"
            )
        diag.flags.writeable = False
        offdiag.flags.writeable = False
        object.__setattr__(self, "diag", diag)
        object.__setattr__(self, "offdiag", offdiag)

    @property
    def size(self) -> int:
        return int(self.diag.size)

    def to_dense(self) -> np.ndarray:
        return np.diag(self.diag) + np.diag(self.offdiag, 1) + np.diag(self.offdiag, -1)


@dataclass(frozen=True)
class EigenResult:
    values: np.ndarray
    vectors: np.ndarray | None = None  # column i belongs to values[i]

    def owners(self) -> np.ndarray:
        """For each basis index, the eigenvector carrying the largest weight on it."""
        if self.vectors is None:
            raise ValueError("eigenvectors were not computed")
        return np.argmax(np.abs(self.vectors), axis=1)


def tridiag_eigenvalues(T: TridiagonalSymmetric, vectors: bool = False) -> EigenResult:
    """All eigenvalues of T in ascending order, optionally with orthonormal vectors."""
    if T.size == 0:
        raise EmptyMatrixError("cannot diagonalize an empty matrix")
    if T.size == 1:
        vecs = np.ones((1, 1)) if vectors else None
        return EigenResult(values=T.diag.copy(), vectors=vecs)

    if vectors:
        w, v = eigh_tridiagonal(T.diag, T.offdiag, lapack_driver="stemr")
        return EigenResult(values=w, vectors=v)
    w = eigh_tridiagonal(T.diag, T.offdiag, eigvals_only=True, lapack_driver="stebz")
    return EigenResult(values=np.asarray(w))


def sturm_count(T: TridiagonalSymmetric, y: float) -> int:
    """Number of eigenvalues of T strictly below y (negative LDL^T pivots of T - yI)."""
    if T.size == 0:
        raise EmptyMatrixError("empty matrix has no Sturm sequence")
    tiny = np.finfo(float).tiny
    eps = np.finfo(float).eps
    off_sq = T.offdiag**2
    q = T.diag[0] - y
    count = int(q < 0)
    for k in range(1, T.size):
        if q == 0.0:
            q = eps * (abs(T.offdiag[k - 1]) + tiny)
        q = T.diag[k] - y - off_sq[k - 1] / q
        count += int(q < 0)
    return count


def tridiagonalize(A: np.ndarray) -> TridiagonalSymmetric:
    """Orthogonal (Householder) reduction of a dense symmetric matrix."""
    A = np.asarray(A, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError("expected a square matrix")
    if A.shape[0] == 0:
        raise EmptyMatrixError("cannot reduce an empty matrix")
    H = hessenberg(0.5 * (A + A.T))
    off = 0.5 * (np.diag(H, -1) + np.diag(H, 1))
    return TridiagonalSymmetric(diag=np.diag(H).copy(), offdiag=off)
