"""Generalized Laguerre polynomials by ascending three-term recurrence.

    (k+1) L_{k+1} = (2k+1+alpha-x) L_k - (k+alpha) L_{k-1},   L_0 = 1
"""

import numpy as np

from src.orthopoly.special import log_gamma


def laguerre_table(n_max: int, alpha: float, x) -> np.ndarray:
    """Rows L_0^alpha(x) .. L_{n_max}^alpha(x); trailing axes follow ``x``."""
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    x = np.asarray(x, dtype=float)
    table = np.empty((n_max + 1,) + x.shape)
    table[0] = 1.0
    if n_max >= 1:
        table[1] = 1.0 + alpha - x
    for k in range(1, n_max):
        table[k + 1] = ((2 * k + 1 + alpha - x) * table[k] - (k + alpha) * table[k - 1]) / (k + 1)
    return table


def laguerre_scaled_tail(n: int, alpha: float, x) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """(L_{n-1}, L_n, L_{n+1}) divided by exp(log_scale), plus log_scale, per point.

    The recurrence is renormalized whenever it grows past 1e100 so large
    arguments and degrees do not overflow.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    x = np.asarray(x, dtype=float)
    log_scale = np.zeros_like(x)
    older = np.zeros_like(x)
    prev = np.ones_like(x)
    cur = 1.0 + alpha - x
    for k in range(1, n + 1):
        older, prev, cur = prev, cur, ((2 * k + 1 + alpha - x) * cur - (k + alpha) * prev) / (k + 1)
        big = np.maximum(np.abs(prev), np.abs(cur))
        rescale = big > 1e100
        if np.any(rescale):
            factor = np.where(rescale, big, 1.0)
            older = older / factor
            prev = prev / factor
            cur = cur / factor
            log_scale = log_scale + np.log(factor)
    return older, prev, cur, log_scale


def laguerre_functions(n_max: int, alpha: float, x, log_weights) -> np.ndarray:
    """Rows sqrt(w_j) l_k(x_j) for the orthonormal family l_k = L_k sqrt(k! / Gamma(k+alpha+1)).

    Runs the orthonormal recurrence

        sqrt((k+1)(k+1+alpha)) l_{k+1} = (2k+1+alpha-x) l_k - sqrt(k(k+alpha)) l_{k-1}

    with a per-node log scale that starts at log sqrt(w_j) and absorbs growth, so
    neither the polynomial nor the weight overflows at large sizes.
    """
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    x = np.asarray(x, dtype=float)
    log_scale = 0.5 * np.asarray(log_weights, dtype=float) - 0.5 * log_gamma(alpha + 1.0)
    rows = np.empty((n_max + 1,) + x.shape)
    prev = np.zeros_like(x)
    cur = np.ones_like(x)
    rows[0] = np.exp(log_scale)
    for k in range(n_max):
        step = ((2 * k + 1 + alpha - x) * cur - np.sqrt(k * (k + alpha)) * prev) / np.sqrt((k + 1) * (k + 1 + alpha))
        prev, cur = cur, step
        big = np.abs(cur)
        rescale = big > 1e100
        if np.any(rescale):
            factor = np.where(rescale, big, 1.0)
            prev = prev / factor
            cur = cur / factor
            log_scale = log_scale + np.log(factor)
        with np.errstate(divide="ignore"):
            rows[k + 1] = np.sign(cur) * np.exp(np.log(np.abs(cur)) + log_scale)
    return rows


def laguerre_eval(n: int, alpha: float, x):
    """L_n^alpha(x); scalar in, scalar out."""
    value = laguerre_table(n, alpha, x)[n]
    return float(value) if np.ndim(value) == 0 else value
