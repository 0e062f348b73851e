"""Self-check suite: polynomial identities, oracles and cross-method agreement.

Each check computes one worst-case deviation and compares it against a limit.
Checks never raise; an exception inside a check is recorded as a failure.
"""

import logging
import math
from dataclasses import dataclass

import numpy as np

from config.settings import Settings
from src.errors import TraError
from src.orthopoly import (
    BesselParams,
    bessel_generating_function,
    bessel_inner_product,
    bessel_norm,
    bessel_sequence,
    bessel_series,
    bessel_via_laguerre,
    gauss_laguerre_rule,
)
from src.orthopoly.identities import (
    backward_shift_residual,
    differential_equation_residual,
    forward_shift_residual,
    identity_grid,
    lowering_identity_residual,
    triple_agreement,
)
from src.reproduce.methods import compute_spectrum
from src.tra import (
    PhysicalParams,
    b_recursion_coefficients,
    basis_from_energy,
    expansion_coeffs,
    recursion_matrix,
    recursion_residuals,
    tra_params,
)
from src.wavefn import RadialGrid, build_wavefunction, schrodinger_residual

logger = logging.getLogger(__name__)

REFERENCE = PhysicalParams(omega=1.0, a=0.5, ell=5)
GROUND_ENERGY = 6.505038139


@dataclass
class CheckResult:
    name: str
    group: str
    value: float
    limit: float
    error: str = ""

    @property
    def passed(self) -> bool:
        return not self.error and self.value <= self.limit

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "group": self.group,
            "value": self.value,
            "limit": self.limit,
            "passed": self.passed,
            "error": self.error,
        }


def _rel(a, b) -> float:
    a, b = np.asarray(a, dtype=float), np.asarray(b, dtype=float)
    return float(np.max(np.abs(a - b) / np.maximum(np.abs(b), 1e-300)))


# -- identities ---------------------------------------------------------------

def _recurrence_vs_series(settings):
    mu = -12.3
    p = BesselParams.for_mu(mu)
    x = np.array([0.01, 0.1, 0.5, 1.0])
    rows = bessel_sequence(p, x)
    series = np.array([bessel_series(mu, n, x) for n in range(p.max_degree + 1)])
    return _rel(rows, series), 1e-9


def _laguerre_form(settings):
    mu = -12.3
    x = np.array([0.05, 0.3, 2.0])
    worst = max(_rel(bessel_via_laguerre(mu, n, x), bessel_series(mu, n, x)) for n in range(8))
    return worst, 1e-9


def _orthogonality(settings):
    p = BesselParams.for_mu(-6.3)
    worst = 0.0
    for n in range(p.max_degree + 1):
        norm_n = bessel_norm(p, n)
        worst = max(worst, abs(bessel_inner_product(p, n, n) / norm_n - 1.0))
        for m in range(n):
            scale = math.sqrt(norm_n * bessel_norm(p, m))
            worst = max(worst, abs(bessel_inner_product(p, n, m)) / scale)
    return worst, 1e-9


def _generating_function(settings):
    mu, x, t = -8.5, 0.1, 0.25
    total = sum(bessel_series(mu, n, x) * t**n / math.factorial(n) for n in range(60))
    return _rel(total, bessel_generating_function(mu, x, t)), 1e-10


def _quadrature_moment(settings):
    rule = gauss_laguerre_rule(1.5, 8)
    return _rel(rule.integrate(lambda x: x**3), math.gamma(5.5)), 1e-12


def _differential_equation(settings):
    return identity_grid(differential_equation_residual, cap=4), 1e-5


def _forward_shift(settings):
    return identity_grid(forward_shift_residual, lowest=1), 1e-6


def _lowering_identity(settings):
    return identity_grid(lowering_identity_residual), 1e-11


def _backward_shift(settings):
    return identity_grid(backward_shift_residual), 1e-6


def _three_forms_agree(settings):
    return identity_grid(triple_agreement), 1e-9


def _b_recursion_vs_energy_recursion(settings):
    bp = basis_from_energy(17.3, REFERENCE.omega)
    J = recursion_matrix(REFERENCE, bp)
    kappa = -4.0 / (REFERENCE.omega * REFERENCE.a**2)
    diag, lower, upper = b_recursion_coefficients(tra_params(REFERENCE), bp.mu, bp.N)
    worst = max(
        _rel(diag, kappa * np.diag(J)),
        _rel(lower[1:], kappa * np.diag(J, -1)),
        _rel(upper[:-1], kappa * np.diag(J, 1)),
    )
    return worst, 1e-12


def _coefficients_solve_recursion(settings):
    bp = basis_from_energy(GROUND_ENERGY, REFERENCE.omega)
    coeffs = expansion_coeffs(REFERENCE, bp)
    worst = max(
        float(np.max(recursion_residuals(REFERENCE, bp, coeffs.B, form="P"))),
        float(np.max(recursion_residuals(REFERENCE, bp, coeffs.F, form="F"))),
    )
    return worst, 1e-10


# -- oracles and cross-method -------------------------------------------------

def _pure_oscillator(settings):
    p = PhysicalParams(omega=1.0, a=0.0, ell=4)
    worst = 0.0
    for ratio in (0.8, 1.0, 1.25):
        spectrum = compute_spectrum("matrix", p, settings, levels=15, size=60, lambda_ratio=ratio)
        worst = max(worst, float(np.max(np.abs(spectrum.deltas))))
    return worst, 1e-10


def _pps_vs_matrix(settings):
    pps = compute_spectrum("pps", REFERENCE, settings, levels=10)
    exact = settings.model_copy(update={"overlap_rule": "exact"})
    matrix = compute_spectrum("matrix", REFERENCE, exact, levels=10)
    if pps.indices != matrix.indices:
        raise TraError(f"levels differ: pps {pps.indices}, matrix {matrix.indices}")
    return float(np.max(np.abs(np.subtract(pps.levels, matrix.levels)))), 5e-6


def _ground_state_residual(settings):
    w = build_wavefunction(REFERENCE, GROUND_ENERGY, 0, grid=RadialGrid.uniform(0.5, 10.0, 4000, REFERENCE.omega))
    if w.N != 2:
        raise TraError(f"ground state uses N={w.N}, expected 2")
    return schrodinger_residual(w, REFERENCE), 1e-4


CHECKS = [
    ("bessel.recurrence_vs_series", "identities", _recurrence_vs_series),
    ("bessel.laguerre_form", "identities", _laguerre_form),
    ("bessel.orthogonality", "identities", _orthogonality),
    ("bessel.generating_function", "identities", _generating_function),
    ("bessel.differential_equation", "identities", _differential_equation),
    ("bessel.forward_shift", "identities", _forward_shift),
    ("bessel.lowering_identity", "identities", _lowering_identity),
    ("bessel.backward_shift", "identities", _backward_shift),
    ("bessel.three_forms_agree", "identities", _three_forms_agree),
    ("quadrature.moment", "identities", _quadrature_moment),
    ("tra.b_recursion_vs_energy_recursion", "identities", _b_recursion_vs_energy_recursion),
    ("tra.coefficients_solve_recursion", "identities", _coefficients_solve_recursion),
    ("hmatrix.pure_oscillator", "oracle", _pure_oscillator),
    ("wavefn.ground_state_residual", "oracle", _ground_state_residual),
    ("cross.pps_vs_matrix", "cross-method", _pps_vs_matrix),
]


def run_checks(settings: Settings, groups: tuple[str, ...] | None = None) -> list[CheckResult]:
    """Run every registered check (or only those in ``groups``)."""
    results = []
    for name, group, check in CHECKS:
        if groups is not None and group not in groups:
            continue
        try:
            value, limit = check(settings)
            result = CheckResult(name=name, group=group, value=float(value), limit=limit)
        except (TraError, ValueError, ArithmeticError) as exc:
            logger.warning("check %s raised: %s", name, exc)
            result = CheckResult(name=name, group=group, value=math.inf, limit=0.0, error=str(exc))
        logger.debug("%s: %.3e (limit %.1e) %s", name, result.value, result.limit, "ok" if result.passed else "FAIL")
        results.append(result)
    return results
