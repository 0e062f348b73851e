"""Characteristic determinant det(T - yI) of a tridiagonal matrix.

The recurrence only needs the products T[k, k-1] * T[k-1, k], so it also
serves the nonsymmetric recursion matrix whose off-diagonal products may be
negative (see ``char_poly_from_squares``).
"""

import math

import numpy as np

from src.eigen.tridiagonal import TridiagonalSymmetric

_RESCALE_HI = 1e100
_RESCALE_LO = 1e-100


def char_poly_from_squares(diag, off_sq, y: float) -> tuple[float, float]:
    """(sign, log|det|) of the tridiagonal matrix with diagonal ``diag`` and
    off-diagonal products ``off_sq``, shifted by -y.

    Returns (nan, nan) when a coefficient is not finite (a pole).
    """
    diag = np.asarray(diag, dtype=float)
    off_sq = np.asarray(off_sq, dtype=float)
    if not (np.all(np.isfinite(diag)) and np.all(np.isfinite(off_sq))):
        return math.nan, math.nan

    log_scale = 0.0
    p_prev, p_cur = 1.0, diag[0] - y
    for k in range(1, diag.size):
        p_prev, p_cur = p_cur, (diag[k] - y) * p_cur - off_sq[k - 1] * p_prev
        m = max(abs(p_prev), abs(p_cur))
        if m > _RESCALE_HI or 0.0 < m < _RESCALE_LO:
            p_prev /= m
            p_cur /= m
            log_scale += math.log(m)

    if p_cur == 0.0:
        return 0.0, -math.inf
    return math.copysign(1.0, p_cur), math.log(abs(p_cur)) + log_scale


def char_poly(T: TridiagonalSymmetric, y: float) -> float:
    """det(T - yI) by d_k = (a_k - y) d_{k-1} - b_{k-1}^2 d_{k-2}."""
    sign, log_abs = char_poly_scaled(T, y)
    if sign == 0.0:
        return 0.0
    return sign * math.exp(log_abs)


def char_poly_scaled(T: TridiagonalSymmetric, y: float) -> tuple[float, float]:
    """Overflow-free form of ``char_poly``: (sign, log|det|)."""
    return char_poly_from_squares(T.diag, T.offdiag**2, y)
