"""Finite-series bound-state wavefunctions and their checks.

    psi_k(r) = f0 (omega r^2)^(-mu-1/4) e^(-omega r^2/2) sum_n F_n Y_n^mu(1/omega r^2)

with F_n = G_n B_n^mu(z; gamma). The prefactor and the sum are combined in
log space: 1/omega r^2 is large near the origin, where the sum grows like a
high power of it while the prefactor vanishes.
"""

import dataclasses
import logging
from dataclasses import dataclass

import numpy as np
from scipy.integrate import trapezoid

from src.errors import (
    ConfigError,
    EnergyTooSmallError,
    GridTooCoarseError,
    InsufficientLevelsError,
    InvalidEnergyError,
)
from src.orthopoly.bessel import BesselParams, bessel_sequence
from src.pps.levels import EnergySpectrum
from src.tra.params import BasisParams, PhysicalParams, basis_from_energy
from src.tra.polynomial import ExpansionCoefficients, expansion_coeffs

logger = logging.getLogger(__name__)

MIN_RESIDUAL_POINTS = 2000


@dataclass(frozen=True)
class RadialGrid:
    r: np.ndarray

    @classmethod
    def uniform(cls, r_min: float, r_max: float, points: int, omega: float = 1.0) -> "RadialGrid":
        """``points`` radii from r_min to r_max, both in units of 1/sqrt(omega)."""
        if not 0 < r_min < r_max:
            raise ConfigError(f"need 0 < r_min < r_max, got {r_min}, {r_max}")
        if points < 2:
            raise ConfigError(f"grid needs at least 2 points, got {points}")
        return cls(r=np.linspace(r_min, r_max, points) / np.sqrt(omega))

    @property
    def size(self) -> int:
        return int(self.r.size)

    @property
    def step(self) -> float:
        return float(self.r[1] - self.r[0])

    def is_uniform(self) -> bool:
        d = np.diff(self.r)
        return bool(np.allclose(d, d[0], rtol=1e-9, atol=0))


@dataclass(frozen=True)
class RadialWavefunction:
    k: int
    energy: float
    N: int
    grid: RadialGrid
    psi: np.ndarray
    coeffs: ExpansionCoefficients | None = None

    @property
    def r(self) -> np.ndarray:
        return self.grid.r

    @property
    def terms(self) -> int:
        return self.N + 1


def evaluate_series(p: PhysicalParams, bp: BasisParams, F, r) -> np.ndarray:
    """Unnormalized psi(r) for coefficients F_0..F_N."""
    r = np.asarray(r, dtype=float)
    w = p.omega * r**2
    rows = bessel_sequence(BesselParams(mu=bp.mu, max_degree=bp.N), 1.0 / w)
    S = np.asarray(F, dtype=float) @ rows
    with np.errstate(divide="ignore"):
        log_abs = (-bp.mu - 0.25) * np.log(w) - 0.5 * w + np.log(np.abs(S))
    return np.sign(S) * np.exp(log_abs)


def build_wavefunction(
    p: PhysicalParams,
    E_k: float,
    k: int,
    grid: RadialGrid | None = None,
    normalize: bool = True,
    coeffs: ExpansionCoefficients | None = None,
) -> RadialWavefunction:
    """Sample the level-k wavefunction at energy E_k.

    With ``normalize`` f0 gives unit trapezoidal norm on the grid; otherwise
    f0 = 1. ``coeffs`` overrides the computed expansion coefficients.
    """
    try:
        bp = basis_from_energy(E_k, p.omega)
    except EnergyTooSmallError as exc:
        raise InvalidEnergyError(str(exc)) from exc
    if grid is None:
        grid = RadialGrid.uniform(0.05, 8.0, 4000, p.omega)
    if coeffs is None:
        coeffs = expansion_coeffs(p, bp)
    if coeffs.terms != bp.N + 1:
        raise ValueError(f"expected {bp.N + 1} coefficients at E={E_k}, got {coeffs.terms}")

    psi = evaluate_series(p, bp, coeffs.F, grid.r)
    f0 = 1.0
    if normalize:
        norm = trapezoid(psi**2, grid.r)
        if not norm > 0:
            raise InvalidEnergyError(f"wavefunction at E={E_k} vanishes on the grid")
        f0 = 1.0 / np.sqrt(norm)
        psi = psi * f0
    logger.debug("psi_%d at E=%.9f: %d terms, f0=%.6e", k, E_k, bp.N + 1, f0)
    return RadialWavefunction(
        k=k,
        energy=float(E_k),
        N=bp.N,
        grid=grid,
        psi=psi,
        coeffs=dataclasses.replace(coeffs, f0=f0),
    )


def _window_mask(r: np.ndarray, r_window) -> np.ndarray:
    if r_window is None:
        return np.ones(r.size, dtype=bool)
    lo, hi = r_window
    return (r >= lo) & (r <= hi)


def schrodinger_residual(
    w: RadialWavefunction,
    p: PhysicalParams,
    r_window: tuple[float, float] | None = None,
    threshold: float = 1e-8,
) -> float:
    """max |(H - E) psi| / (|E| max|psi|) over interior points, psi'' by 5-point differences.

    Only points with |psi| > threshold * max|psi| (and inside ``r_window``)
    take part.
    """
    if w.grid.size < MIN_RESIDUAL_POINTS or not w.grid.is_uniform():
        raise GridTooCoarseError(f"residual needs a uniform grid of >= {MIN_RESIDUAL_POINTS} points")

    r, psi, h = w.r, w.psi, w.grid.step
    d2 = (-psi[4:] + 16 * psi[3:-1] - 30 * psi[2:-2] + 16 * psi[1:-3] - psi[:-4]) / (12 * h**2)
    ri = r[2:-2]
    potential = p.ell * (p.ell + 1) / (2 * ri**2) + 0.5 * p.omega**2 * ri**2 + 0.5 * p.a**2 / ri**4
    residual = np.abs(-0.5 * d2 + (potential - w.energy) * psi[2:-2])

    peak = np.max(np.abs(psi))
    mask = (np.abs(psi[2:-2]) > threshold * peak) & _window_mask(ri, r_window)
    if not np.any(mask):
        raise GridTooCoarseError("no interior grid points above the threshold in the window")
    return float(np.max(residual[mask]) / (abs(w.energy) * peak))


def node_count(w: RadialWavefunction, r_window: tuple[float, float] | None = None, threshold: float = 1e-3) -> int:
    """Sign changes of psi, ignoring samples below threshold * max|psi|."""
    psi = w.psi
    keep = (np.abs(psi) > threshold * np.max(np.abs(psi))) & _window_mask(w.r, r_window)
    signs = np.sign(psi[keep])
    return int(np.count_nonzero(signs[1:] != signs[:-1]))


def overlap_matrix(wavefunctions: list[RadialWavefunction]) -> np.ndarray:
    """Trapezoidal overlaps; all wavefunctions must share one grid."""
    if not wavefunctions:
        raise ValueError("no wavefunctions given")
    r = wavefunctions[0].r
    if any(w.r.shape != r.shape or not np.array_equal(w.r, r) for w in wavefunctions):
        raise ValueError("wavefunctions live on different grids")
    psi = np.vstack([w.psi for w in wavefunctions])
    return trapezoid(psi[:, None, :] * psi[None, :, :], r, axis=-1)


def table_header(count: int) -> list[str]:
    return ["r"] + [f"psi{k}" for k in range(count)]


def fig1_data(
    p: PhysicalParams,
    spectrum: EnergySpectrum,
    grid: RadialGrid | None = None,
    count: int = 6,
) -> np.ndarray:
    """Columns r, psi_0 .. psi_{count-1}; un-normalized (f0 = 1)."""
    missing = [k for k in range(count) if k not in spectrum.indices]
    if missing:
        raise InsufficientLevelsError(f"spectrum lacks levels {missing}; need 0..{count - 1}")
    if grid is None:
        grid = RadialGrid.uniform(0.05, 8.0, 4000, p.omega)
    columns = [grid.r]
    for k in range(count):
        w = build_wavefunction(p, spectrum.level(k), k, grid=grid, normalize=False)
        columns.append(w.psi)
    return np.column_stack(columns)
