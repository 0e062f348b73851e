from src.hmatrix.hamiltonian import (
    OVERLAP_RULES,
    HamiltonianMatrix,
    LaguerreBasis,
    default_quadrature,
    hamiltonian,
    matrix_spectrum,
    oscillator_spectrum,
    quadrature_diagnostics,
    singular_overlap,
)

__all__ = [
    "HamiltonianMatrix",
    "LaguerreBasis",
    "OVERLAP_RULES",
    "default_quadrature",
    "hamiltonian",
    "matrix_spectrum",
    "oscillator_spectrum",
    "quadrature_diagnostics",
    "singular_overlap",
]
