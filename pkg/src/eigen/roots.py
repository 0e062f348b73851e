"""Energies where det(J(E) - (l+1/2)^2 I) vanishes at a fixed matrix size.

J(E) is the energy recursion matrix built with mu = -E/2omega and N+1 rows
regardless of the admissible degree at E, so its off-diagonal products may be
negative; the determinant only needs those products. Sign changes are found on
a uniform grid and bisected. Poles of the coefficients also flip the sign and
are rejected because |g| grows towards them instead of shrinking.
"""

import logging

import numpy as np
from scipy.optimize import bisect

from src.eigen.determinant import char_poly_from_squares
from src.errors import InvalidBracketError, RootSearchError
from src.pps.levels import EnergySpectrum, from_mapping
from src.tra.coefficients import _coefficients
from src.tra.params import PhysicalParams, oscillator_level

logger = logging.getLogger(__name__)

POLE_NUDGES = (1e-12, -1e-12, 4e-12, -4e-12)


def det_log(p: PhysicalParams, N: int, E: float) -> tuple[float, float]:
    """(sign, log|g(E)|), or (nan, nan) at a pole."""
    diag, off_sq = _coefficients(p, -E / (2.0 * p.omega), N)
    return char_poly_from_squares(diag, off_sq, p.target)


def finite_det_log(p: PhysicalParams, N: int, E: float) -> tuple[float, float]:
    """``det_log`` at E, or at E nudged by a few parts in 1e12 when E sits on a pole.

    Returns (nan, nan) only if every nudge still lands on a pole.
    """
    sign, log_abs = det_log(p, N, E)
    for step in POLE_NUDGES:
        if np.isfinite(sign):
            break
        sign, log_abs = det_log(p, N, E * (1.0 + step))
    return sign, log_abs


def _bisect_cell(p: PhysicalParams, N: int, lo: float, hi: float, tol: float) -> float:
    def sign_of(E: float) -> float:
        return finite_det_log(p, N, E)[0]

    try:
        return bisect(sign_of, lo, hi, xtol=tol, maxiter=200)
    except (ValueError, RuntimeError) as exc:
        raise RootSearchError(f"bisection failed in [{lo:.9f}, {hi:.9f}] (N={N}): {exc}") from exc


def _accepted_roots(p, N, E_lo, E_hi, grid_points, tol) -> list[float]:
    grid = np.linspace(E_lo, E_hi, grid_points)
    evals = [finite_det_log(p, N, E) for E in grid]
    roots: list[float] = []

    for i, (E, (s, _)) in enumerate(zip(grid, evals)):
        if s == 0.0:
            roots.append(float(E))
            continue
        if i + 1 == grid.size:
            break
        s_next, _ = evals[i + 1]
        if not (np.isfinite(s) and np.isfinite(s_next)) or s_next == 0.0 or s == s_next:
            continue

        root = _bisect_cell(p, N, grid[i], grid[i + 1], tol)
        _, log_root = finite_det_log(p, N, root)
        if log_root < min(evals[i][1], evals[i + 1][1]):
            roots.append(float(root))
        else:
            logger.debug("rejected pole-induced sign change near E=%.6f (N=%d)", root, N)
    return roots


def _assign_levels(p: PhysicalParams, roots: list[float], E_hi: float, level_window: float) -> dict[int, float]:
    """For each k, the root nearest omega(2k+l+3/2) within level_window*omega."""
    window = level_window * p.omega
    assigned: dict[int, float] = {}
    k = 0
    while oscillator_level(k, p) - window <= E_hi:
        centre = oscillator_level(k, p)
        near = [E for E in roots if abs(E - centre) <= window]
        if near:
            assigned[k] = min(near, key=lambda E: abs(E - centre))
        k += 1
    return assigned


def _check_bracket(p: PhysicalParams, N: int, E_lo: float, E_hi: float, grid_points: int) -> None:
    if N < 0:
        raise ValueError(f"matrix size index N must be >= 0, got {N}")
    if grid_points < 2:
        raise ValueError(f"sign scan needs at least 2 grid points, got {grid_points}")
    if not E_lo > p.omega:
        raise InvalidBracketError(f"E_lo={E_lo} must exceed omega={p.omega}")
    if not E_hi > E_lo:
        raise InvalidBracketError(f"empty energy window [{E_lo}, {E_hi}]")


def det_energy_roots(
    p: PhysicalParams,
    N: int,
    E_lo: float,
    E_hi: float,
    grid_points: int = 2000,
    tol: float = 1e-11,
    physical_only: bool = True,
    level_window: float = 0.25,
) -> list[float]:
    """Ascending roots of g(E) in [E_lo, E_hi] for a matrix of size N+1.

    With ``physical_only`` (default) only roots assigned to an oscillator level
    are returned; mirror roots and strays are dropped.
    """
    _check_bracket(p, N, E_lo, E_hi, grid_points)
    roots = _accepted_roots(p, N, E_lo, E_hi, grid_points, tol)
    if not physical_only:
        return sorted(roots)
    return sorted(_assign_levels(p, roots, E_hi, level_window).values())


def det_spectrum(
    p: PhysicalParams,
    N: int,
    E_lo: float,
    E_hi: float,
    grid_points: int = 2000,
    tol: float = 1e-11,
    level_window: float = 0.25,
) -> EnergySpectrum:
    """Determinant roots labelled by oscillator level."""
    _check_bracket(p, N, E_lo, E_hi, grid_points)
    roots = _accepted_roots(p, N, E_lo, E_hi, grid_points, tol)
    by_level = _assign_levels(p, roots, E_hi, level_window)
    logger.info("det N=%d: %d physical roots in [%.3f, %.3f]", N, len(by_level), E_lo, E_hi)
    return from_mapping(p, by_level, method="det")
