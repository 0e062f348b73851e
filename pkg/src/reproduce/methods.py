"""One entry point for the three spectrum methods, driven by Settings."""

import logging

from config.settings import Settings
from src.eigen.roots import det_spectrum
from src.errors import ConfigError
from src.hmatrix import LaguerreBasis, default_quadrature, hamiltonian, matrix_spectrum
from src.pps import default_emax, pps_spectrum
from src.pps.levels import EnergySpectrum
from src.tra.params import PhysicalParams, oscillator_level

logger = logging.getLogger(__name__)

METHODS = ("pps", "matrix", "det")


def default_det_window(p: PhysicalParams, N: int, energy_floor: float = 1e-6) -> tuple[float, float]:
    """Half an omega below the lowest level up to 1.25 omega above level N."""
    lo = max(oscillator_level(0, p) - 0.5 * p.omega, p.omega * (1.0 + energy_floor))
    return lo, default_emax(p, N + 1)


def compute_spectrum(
    method: str,
    p: PhysicalParams,
    settings: Settings,
    levels: int = 10,
    E_max: float | None = None,
    size: int | None = None,
    N: int | None = None,
    window: tuple[float, float] | None = None,
    lambda_ratio: float | None = None,
) -> EnergySpectrum:
    """Bound-state spectrum by ``method``; unset arguments fall back to ``settings``."""
    if method == "pps":
        E_max = default_emax(p, levels) if E_max is None else E_max
        return pps_spectrum(
            p,
            E_max,
            settings.fit_points,
            fit_order=settings.fit_order,
            energy_floor=settings.energy_floor,
            tol=settings.root_tol,
            levels=levels,
        )

    if method == "matrix":
        size = settings.matrix_size if size is None else size
        ratio = settings.lambda_ratio if lambda_ratio is None else lambda_ratio
        basis = LaguerreBasis.build(p, size, ratio)
        rule = settings.overlap_rule
        K = settings.quadrature_points or default_quadrature(size, rule)
        logger.debug("matrix: M=%d, lambda^2/omega=%g, K=%d, rule=%s", size, ratio, K, rule)
        return matrix_spectrum(hamiltonian(p, basis, K=K, rule=rule), min(levels, size))

    if method == "det":
        if N is None:
            raise ConfigError("the determinant method needs a matrix size index N")
        lo, hi = default_det_window(p, N, settings.energy_floor) if window is None else window
        return det_spectrum(
            p,
            N,
            lo,
            hi,
            grid_points=settings.det_grid_points,
            tol=settings.root_tol,
            level_window=settings.level_window,
        )

    raise ConfigError(f"unknown method {method!r}; expected one of {', '.join(METHODS)}")
