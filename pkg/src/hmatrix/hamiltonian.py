"""Hamiltonian of the spiked oscillator in a Laguerre oscillator basis.

Basis functions, with x = lambda^2 r^2 and nu = l + 1/2:

    chi_n(r) = sqrt(2 lambda) C_n x^((l+1)/2) e^(-x/2) L_n^nu(x),
    C_n = sqrt(n! / Gamma(n + nu + 1))

The oscillator part is tridiagonal in this basis. The a^2/2r^4 term needs
C_n C_m times the integral of x^(l-3/2) e^-x L_n^nu L_m^nu, assembled by one
of two rules:

    "basis"  the M-point Gauss rule of the basis weight x^nu e^-x applied to
             x^-2 L_n L_m. Not exact, and not variational, but it is the
             construction the tabulated matrix spectra were computed with.
    "exact"  the Gauss rule with weight exponent l - 3/2 at K >= 2M - 1,
             exact for every entry. Needs l >= 1.

For l = 0 the integrals diverge; both rules fall back to the basis weight
with a warning.

Every table goes through ``laguerre_functions`` so the node rows stay finite
at large basis sizes where L_n overflows and the weights underflow.
"""

import logging
from dataclasses import dataclass

import numpy as np

from src.eigen.tridiagonal import tridiag_eigenvalues, tridiagonalize
from src.errors import ConfigError, NonFiniteMatrixError, RuleTooSmallError
from src.orthopoly.laguerre import laguerre_functions
from src.orthopoly.quadrature import QuadratureRule, gauss_laguerre_rule
from src.orthopoly.special import log_gamma
from src.pps.levels import EnergySpectrum, from_mapping
from src.tra.params import PhysicalParams, oscillator_level

logger = logging.getLogger(__name__)

OVERLAP_RULES = ("basis", "exact")


@dataclass(frozen=True)
class LaguerreBasis:
    lambda2: float
    nu: float
    size: int
    cn: np.ndarray

    @classmethod
    def build(cls, p: PhysicalParams, size: int, lambda_ratio: float = 1.0) -> "LaguerreBasis":
        """Basis of ``size`` functions at scale lambda^2 = lambda_ratio * omega."""
        if size < 1:
            raise ConfigError(f"basis size must be >= 1, got {size}")
        if not lambda_ratio > 0:
            raise ConfigError(f"lambda ratio must be positive, got {lambda_ratio}")
        nu = p.ell + 0.5
        n = np.arange(size, dtype=float)
        cn = np.exp(0.5 * (log_gamma(n + 1) - log_gamma(n + nu + 1)))
        return cls(lambda2=lambda_ratio * p.omega, nu=nu, size=size, cn=cn)

    def functions(self, rule: QuadratureRule) -> np.ndarray:
        """Rows sqrt(w_j) C_n L_n^nu(x_j) at the nodes of ``rule``."""
        return laguerre_functions(self.size - 1, self.nu, rule.nodes, rule.log_weights)

    def gram(self, K: int | None = None) -> np.ndarray:
        """C_n C_m times the integral of x^nu e^-x L_n L_m; the identity once K >= size."""
        K = self.size if K is None else K
        phi = self.functions(gauss_laguerre_rule(self.nu, K))
        return phi @ phi.T


@dataclass(frozen=True)
class HamiltonianMatrix:
    entries: np.ndarray
    params: PhysicalParams
    basis: LaguerreBasis
    rule: str = "basis"

    @property
    def size(self) -> int:
        return self.basis.size


def _check_rule(rule: str) -> None:
    if rule not in OVERLAP_RULES:
        raise ConfigError(f"unknown overlap rule {rule!r}; expected one of {', '.join(OVERLAP_RULES)}")


def default_quadrature(size: int, rule: str) -> int:
    """M nodes for the basis rule, 2M for the exact one."""
    _check_rule(rule)
    return size if rule == "basis" else 2 * size


def _overlap_block(basis: LaguerreBasis, ell: int, K: int, rule: str = "basis") -> np.ndarray:
    """C_n C_m times the integral of x^(l-3/2) e^-x L_n L_m, all n, m < size."""
    if rule == "exact" and ell >= 1:
        phi = basis.functions(gauss_laguerre_rule(ell - 1.5, K))
        return phi @ phi.T

    weighted = gauss_laguerre_rule(basis.nu, K)
    phi = basis.functions(weighted) / weighted.nodes
    return phi @ phi.T


def singular_overlap(n: int, m: int, ell: int, K: int) -> float:
    """Integral of x^(l-3/2) e^-x L_n^(l+1/2) L_m^(l+1/2) over (0, inf), unnormalized."""
    if min(n, m) < 0:
        raise ValueError("degrees must be non-negative")
    if K < n + m + 1:
        raise RuleTooSmallError(f"{K}-point rule cannot integrate degree {n + m} exactly (need K >= {n + m + 1})")
    nu = ell + 0.5
    if ell == 0:
        logger.warning("l = 0: integrand x^-3/2 is not integrable at the origin; result depends on K")
        rule = gauss_laguerre_rule(nu, K)
        table = laguerre_functions(max(n, m), nu, rule.nodes, rule.log_weights) / rule.nodes
    else:
        rule = gauss_laguerre_rule(ell - 1.5, K)
        table = laguerre_functions(max(n, m), nu, rule.nodes, rule.log_weights)
    normed = float(np.dot(table[n], table[m]))
    log_cn = 0.5 * (log_gamma(n + 1) - log_gamma(n + nu + 1) + log_gamma(m + 1) - log_gamma(m + nu + 1))
    return normed * float(np.exp(-log_cn))


def quadrature_diagnostics(p: PhysicalParams, basis: LaguerreBasis, K: int, rule: str = "basis") -> float:
    """Largest relative change of the singular block between K and 2K nodes.

    Zero up to rounding for the exact rule; for the basis rule and for l = 0
    it shows how far the block is from the converged integrals.
    """
    coarse = _overlap_block(basis, p.ell, K, rule)
    fine = _overlap_block(basis, p.ell, 2 * K, rule)
    scale = np.max(np.abs(fine))
    return float(np.max(np.abs(fine - coarse)) / scale) if scale > 0 else 0.0


def hamiltonian(
    p: PhysicalParams,
    basis: LaguerreBasis,
    K: int | None = None,
    rule: str = "basis",
) -> HamiltonianMatrix:
    """Dense symmetric matrix of H in ``basis``.

    K defaults to ``size`` nodes for the basis rule and ``2 * size`` for the
    exact rule.
    """
    M = basis.size
    K = default_quadrature(M, rule) if K is None else K
    if K < 1:
        raise ConfigError(f"quadrature needs at least one node, got K={K}")
    if rule == "exact" and p.ell >= 1 and K < 2 * M - 1:
        raise RuleTooSmallError(f"{K}-point rule is too small for a basis of {M} (need K >= {2 * M - 1})")

    lam2 = basis.lambda2
    ratio = p.omega**2 / lam2**2
    n = np.arange(M, dtype=float)
    H = np.diag(0.5 * lam2 * (1.0 + ratio) * (2 * n + basis.nu + 1))
    off = 0.5 * lam2 * (1.0 - ratio) * np.sqrt((n[1:]) * (n[1:] + basis.nu))
    H += np.diag(off, 1) + np.diag(off, -1)

    if p.a > 0:
        if p.ell == 0:
            logger.warning(
                "l = 0: the a^2/r^4 matrix elements diverge; the spectrum depends on the basis size (M=%d, K=%d)",
                M, K,
            )
            logger.info("l = 0 quadrature drift between K and 2K: %.3e", quadrature_diagnostics(p, basis, K, rule))
        H += 0.5 * lam2**2 * p.a**2 * _overlap_block(basis, p.ell, K, rule)

    if not np.all(np.isfinite(H)):
        raise NonFiniteMatrixError(f"Hamiltonian has non-finite entries (M={M}, K={K}, rule={rule})")
    H = 0.5 * (H + H.T)
    return HamiltonianMatrix(entries=H, params=p, basis=basis, rule=rule)


def matrix_spectrum(H: HamiltonianMatrix, count: int) -> EnergySpectrum:
    """Lowest ``count`` eigenvalues, labelled k = 0..count-1."""
    if not 1 <= count <= H.size:
        raise ValueError(f"count must be within 1..{H.size}, got {count}")
    values = tridiag_eigenvalues(tridiagonalize(H.entries)).values
    return from_mapping(H.params, {k: float(values[k]) for k in range(count)}, method="matrix")


def oscillator_spectrum(p: PhysicalParams, count: int) -> EnergySpectrum:
    """Analytic a = 0 levels omega (2k + l + 3/2)."""
    return from_mapping(p, {k: oscillator_level(k, p) for k in range(count)}, method="oscillator")
