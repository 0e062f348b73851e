"""Coefficients of the three-term recursion for the expansion coefficients.

For basis parameter mu and c = omega a^2 / 2 the recursion reads

    y P_n = a_n P_n + c n / ((n+mu)(2n+2mu+1)) P_{n-1}
                    - c (n+2mu+1) / ((n+mu+1)(2n+2mu+1)) P_{n+1}

with a_n = (2n+2mu+1)^2 + mu c / ((n+mu)(n+mu+1)). Its symmetric form has
off-diagonal b_n whose square is the product of the two coupling terms.
"""

import numpy as np

from src.eigen.tridiagonal import TridiagonalSymmetric
from src.errors import InvalidBasisError, NonrealOffdiagError
from src.tra.params import BasisParams, PhysicalParams


def _offdiag_radicand(mu: float, n: np.ndarray) -> np.ndarray:
    return -(n + 1) * (n + 2 * mu + 1) / ((2 * n + 2 * mu + 1) * (2 * n + 2 * mu + 3))


def _coefficients(p: PhysicalParams, mu: float, N: int) -> tuple[np.ndarray, np.ndarray]:
    """(a_0..a_N, b_0^2..b_{N-1}^2) with no validation.

    Poles come back as inf/nan and b_n^2 may be negative when N exceeds the
    admissible degree for ``mu``; the determinant scan relies on both.
    """
    c = p.coupling
    n = np.arange(N + 1, dtype=float)
    with np.errstate(divide="ignore", invalid="ignore"):
        diag = (2 * n + 2 * mu + 1) ** 2 + mu * c / ((n + mu) * (n + mu + 1))
        m = n[:-1]
        off_sq = (c / (m + mu + 1)) ** 2 * _offdiag_radicand(mu, m)
    return diag, off_sq


def tridiag_matrix(p: PhysicalParams, bp: BasisParams) -> TridiagonalSymmetric:
    """Real symmetric matrix T of size N+1 for the basis ``bp``."""
    c = p.coupling
    mu, N = bp.mu, bp.N
    diag, _ = _coefficients(p, mu, N)
    if not np.all(np.isfinite(diag)):
        raise InvalidBasisError(f"diagonal hits a pole at mu={mu} (N={N})")

    n = np.arange(N, dtype=float)
    with np.errstate(divide="ignore", invalid="ignore"):
        radicand = _offdiag_radicand(mu, n)
        prefactor = c / (n + mu + 1)
    if not (np.all(np.isfinite(radicand)) and np.all(np.isfinite(prefactor))):
        raise InvalidBasisError(f"off-diagonal hits a pole at mu={mu} (N={N})")
    if np.any(radicand < 0):
        bad = int(np.argmax(radicand < 0))
        raise NonrealOffdiagError(f"b_{bad} is imaginary at mu={mu}; need mu < {-N - 0.5}")
    return TridiagonalSymmetric(diag=diag, offdiag=prefactor * np.sqrt(radicand))


def recursion_matrix(p: PhysicalParams, bp: BasisParams) -> np.ndarray:
    """Dense nonsymmetric matrix J with y P = J P on the first N+1 rows."""
    c = p.coupling
    mu, N = bp.mu, bp.N
    diag, _ = _coefficients(p, mu, N)
    n = np.arange(N + 1, dtype=float)
    with np.errstate(divide="ignore", invalid="ignore"):
        lower = c * n[1:] / ((n[1:] + mu) * (2 * n[1:] + 2 * mu + 1))
        upper = -c * (n[:-1] + 2 * mu + 1) / ((n[:-1] + mu + 1) * (2 * n[:-1] + 2 * mu + 1))
    J = np.diag(diag) + np.diag(lower, -1) + np.diag(upper, 1)
    if not np.all(np.isfinite(J)):
        raise InvalidBasisError(f"recursion matrix hits a pole at mu={mu} (N={N})")
    return J
