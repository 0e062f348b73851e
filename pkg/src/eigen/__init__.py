from src.eigen.determinant import (
    char_poly,
    char_poly_from_squares,
    char_poly_scaled,
)
from src.eigen.tridiagonal import (
    EigenResult,
    TridiagonalSymmetric,
    sturm_count,
    tridiag_eigenvalues,
    tridiagonalize,
)

__all__ = [
    "EigenResult",
    "TridiagonalSymmetric",
    "char_poly",
    "char_poly_from_squares",
    "char_poly_scaled",
    "sturm_count",
    "tridiag_eigenvalues",
    "tridiagonalize",
]
