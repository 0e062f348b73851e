from src.eigen.tridiagonal import TridiagonalSymmetric
from src.tra.coefficients import recursion_matrix, tridiag_matrix
from src.tra.params import (
    BasisParams,
    PhysicalParams,
    TraPolyParams,
    basis_from_energy,
    max_degree,
    oscillator_level,
    tra_params,
)
from src.tra.polynomial import (
    ExpansionCoefficients,
    b_recursion_coefficients,
    b_poly_sequence,
    expansion_coeffs,
    g_coefficients,
    recursion_residuals,
)

__all__ = [
    "BasisParams",
    "ExpansionCoefficients",
    "PhysicalParams",
    "TraPolyParams",
    "TridiagonalSymmetric",
    "b_recursion_coefficients",
    "b_poly_sequence",
    "basis_from_energy",
    "expansion_coeffs",
    "g_coefficients",
    "max_degree",
    "oscillator_level",
    "recursion_matrix",
    "recursion_residuals",
    "tra_params",
    "tridiag_matrix",
]
