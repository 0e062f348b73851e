"""Potential-parameter spectrum: eigenvalue curves y_k(E) and their roots.

At every grid energy the real symmetric matrix T(E) is built with the largest
admissible size N(E)+1. Level k's curve is the eigenvalue whose eigenvector
carries the most weight on basis index k. A bound state of level k is an energy
where that curve meets (l+1/2)^2: the crossing is first estimated from a
continued-fraction fit of E against y sampled inside the bracketing grid
cell, then pinned down by bisection in the same cell.
"""

import logging
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import bisect

from src.eigen.tridiagonal import tridiag_eigenvalues
from src.errors import (
    ConfigError,
    DegeneratePointError,
    InvalidBasisError,
    TargetOutOfRangeError,
    WindowTooSmallError,
)
from src.pps.levels import EnergySpectrum, from_mapping
from src.pps.schlessinger import schlessinger_fit
from src.tra.coefficients import tridiag_matrix
from src.tra.params import PhysicalParams, basis_from_energy, max_degree, oscillator_level

logger = logging.getLogger(__name__)

FIT_ROOT_AGREEMENT = 1e-7
CONTINUITY_FRACTION = 0.1


@dataclass(frozen=True)
class EigenCurves:
    energies: np.ndarray
    sizes: np.ndarray  # N(E_i) per grid point
    sorted_values: np.ndarray  # row i: ascending spectrum of T(E_i), NaN padded
    curves: np.ndarray  # column k: y_k(E_i), NaN where k > N(E_i)
    target_y: float
    skipped: tuple[float, ...] = field(default_factory=tuple)
    discontinuities: tuple[tuple[int, float], ...] = field(default_factory=tuple)

    @property
    def width(self) -> int:
        return int(self.curves.shape[1])

    def curve(self, k: int) -> np.ndarray:
        return self.curves[:, k]


def level_values(p: PhysicalParams, E: float) -> tuple[int, np.ndarray, np.ndarray]:
    """(N, ascending eigenvalues, y_k for k = 0..N) of T at energy E."""
    bp = basis_from_energy(E, p.omega)
    result = tridiag_eigenvalues(tridiag_matrix(p, bp), vectors=True)
    return bp.N, result.values, result.values[result.owners()]


def _continuity_breaks(curves: np.ndarray, energies: np.ndarray, sizes: np.ndarray) -> list[tuple[int, float]]:
    findings = []
    for k in range(curves.shape[1]):
        y = curves[:, k]
        finite = np.isfinite(y)
        if finite.sum() < 2:
            continue
        limit = CONTINUITY_FRACTION * (np.nanmax(y) - np.nanmin(y))
        for i in range(y.size - 1):
            if not (finite[i] and finite[i + 1]) or sizes[i] != sizes[i + 1]:
                continue
            if abs(y[i + 1] - y[i]) > limit:
                findings.append((k, float(energies[i + 1])))
    return findings


def eigen_curves(
    p: PhysicalParams,
    E_max: float,
    M: int,
    energy_floor: float = 1e-6,
    e_min: float | None = None,
) -> EigenCurves:
    """Sample T(E) on M uniform energies in (omega(1+energy_floor), E_max]."""
    if M < 2:
        raise ConfigError(f"need at least 2 grid points, got {M}")
    lo = p.omega * (1.0 + energy_floor)
    if e_min is not None:
        lo = max(lo, e_min)
    if not E_max > lo:
        raise WindowTooSmallError(f"E_max={E_max} leaves no energies above {lo}")

    width = max_degree(-E_max / (2.0 * p.omega)) + 1
    kept_E, kept_N, rows, by_level, skipped = [], [], [], [], []
    for E in np.linspace(lo, E_max, M):
        try:
            N, values, levels = level_values(p, float(E))
        except InvalidBasisError:
            skipped.append(float(E))
            continue
        if N < 1:
            skipped.append(float(E))
            continue
        row = np.full(width, np.nan)
        row[: N + 1] = values
        level_row = np.full(width, np.nan)
        level_row[: N + 1] = levels
        kept_E.append(float(E))
        kept_N.append(N)
        rows.append(row)
        by_level.append(level_row)

    if not kept_E:
        raise WindowTooSmallError(f"no admissible energy in ({lo}, {E_max}]")
    if skipped:
        logger.debug("skipped %d grid energies with N < 1 or a coefficient pole", len(skipped))

    energies = np.array(kept_E)
    sizes = np.array(kept_N)
    curves = np.vstack(by_level)
    findings = _continuity_breaks(curves, energies, sizes)
    for k, E in findings:
        logger.warning("curve y_%d jumps near E=%.6f; possible unresolved crossing", k, E)

    return EigenCurves(
        energies=energies,
        sizes=sizes,
        sorted_values=np.vstack(rows),
        curves=curves,
        target_y=p.target,
        skipped=tuple(skipped),
        discontinuities=tuple(findings),
    )


def _bracketing_cells(curves: EigenCurves, k: int) -> list[int]:
    h = curves.curve(k) - curves.target_y
    cells = []
    for i in range(h.size - 1):
        if not (np.isfinite(h[i]) and np.isfinite(h[i + 1])):
            continue
        if curves.sizes[i] != curves.sizes[i + 1]:
            continue
        if h[i] == 0.0 or np.sign(h[i]) != np.sign(h[i + 1]):
            cells.append(i)
    return cells


def _cell_support(lo: float, hi: float, count: int) -> np.ndarray:
    """Chebyshev-Lobatto energies spanning [lo, hi], ends included."""
    j = np.arange(count)
    return 0.5 * (lo + hi) - 0.5 * (hi - lo) * np.cos(np.pi * j / (count - 1))


def _cell_fit(p: PhysicalParams, k: int, lo: float, hi: float, target: float, fit_order: int) -> float:
    """Fit estimate of E where y_k = target, from a rational fit of E(y) inside one cell.

    Drops to fewer nodes when the fraction breaks down; NaN if every order fails.
    """
    for count in range(max(fit_order, 2), 1, -1):
        energies = _cell_support(lo, hi, count)
        try:
            ys = [level_values(p, float(E))[2][k] for E in energies]
            estimate = schlessinger_fit(ys, energies)(target)
        except (DegeneratePointError, InvalidBasisError) as exc:
            logger.debug("level %d: %d-node fit failed (%s)", k, count, exc)
            continue
        if np.isfinite(estimate):
            return float(estimate)
    return float("nan")


def level_energy(
    curves: EigenCurves,
    p: PhysicalParams,
    k: int,
    fit_order: int = 8,
    tol: float = 1e-11,
) -> tuple[float, float]:
    """(refined energy, fit estimate) of level k.

    The fit runs through ``fit_order`` Chebyshev-Lobatto energies inside the
    grid cell where y_k crosses the target, so its support tracks the root
    rather than the grid spacing.
    """
    if not 0 <= k < curves.width:
        raise TargetOutOfRangeError(f"level {k} is outside the sampled curves")
    cells = _bracketing_cells(curves, k)
    if not cells:
        raise TargetOutOfRangeError(f"y_{k}(E) never reaches {curves.target_y} in the window")

    centre = oscillator_level(k, p)
    E = curves.energies
    cells = [i for i in cells if E[i] - p.omega <= centre <= E[i + 1] + p.omega]
    if not cells:
        raise TargetOutOfRangeError(f"y_{k}(E) meets {curves.target_y} only far from E={centre}")
    cell = min(cells, key=lambda i: abs(0.5 * (E[i] + E[i + 1]) - centre))

    y = curves.curve(k)
    estimate = _cell_fit(p, k, float(E[cell]), float(E[cell + 1]), curves.target_y, fit_order)

    if y[cell] == curves.target_y:
        root = float(E[cell])
    else:
        def h(energy: float) -> float:
            return level_values(p, energy)[2][k] - curves.target_y

        root = float(bisect(h, E[cell], E[cell + 1], xtol=tol, maxiter=200))

    if not np.isfinite(estimate) or abs(estimate - root) > FIT_ROOT_AGREEMENT:
        logger.warning(
            "level %d: fit estimate %.10f differs from root %.10f; possible unresolved crossing",
            k, estimate, root,
        )
    return root, float(estimate)


def default_emax(p: PhysicalParams, levels: int) -> float:
    """Top of a window holding ``levels`` oscillator levels.

    It sits 1.25 omega above the last level, clear of the even multiples of
    omega where a diagonal coefficient has a pole.
    """
    return p.omega * (2 * (levels - 1) + p.ell + 2.75)


def pps_spectrum(
    p: PhysicalParams,
    E_max: float,
    M: int = 100,
    fit_order: int = 8,
    energy_floor: float = 1e-6,
    tol: float = 1e-11,
    levels: int | None = None,
    e_min: float | None = None,
) -> EnergySpectrum:
    curves = eigen_curves(p, E_max, M, energy_floor=energy_floor, e_min=e_min)
    count = curves.width if levels is None else min(levels, curves.width)

    found: dict[int, float] = {}
    skipped: list[int] = []
    for k in range(count):
        try:
            found[k], _ = level_energy(curves, p, k, fit_order=fit_order, tol=tol)
        except TargetOutOfRangeError as exc:
            logger.info("skipping level %d: %s", k, exc)
            skipped.append(k)

    logger.info("pps: %d levels resolved, %d skipped (l=%d)", len(found), len(skipped), p.ell)
    return from_mapping(p, found, method="pps", skipped=skipped)
