"""Generalized Gauss-Laguerre rules (weight x^alpha e^-x on (0, inf)).

Nodes are the eigenvalues of the Jacobi matrix of the L^alpha family
(Golub-Welsch), polished by one Newton step on L_K. Weights come from

    w_j = Gamma(K+alpha+1) x_j / (K! (K+1)^2 L_{K+1}(x_j)^2)

evaluated in log space, which keeps full relative accuracy at the large nodes
where eigenvector components would only carry absolute accuracy.
"""

from dataclasses import dataclass

import numpy as np

from src.eigen.tridiagonal import TridiagonalSymmetric, tridiag_eigenvalues
from src.errors import InvalidAlphaError
from src.orthopoly.laguerre import laguerre_scaled_tail
from src.orthopoly.special import log_gamma


@dataclass(frozen=True)
class QuadratureRule:
    alpha: float
    nodes: np.ndarray
    weights: np.ndarray
    sqrt_weights: np.ndarray  # kept separately: weights underflow at large nodes first
    log_weights: np.ndarray

    @property
    def size(self) -> int:
        return int(self.nodes.size)

    def integrate(self, f) -> float:
        """Sum of weights * f(nodes); ``f`` is called once on the node array."""
        return float(np.dot(self.weights, f(self.nodes)))


def jacobi_matrix(alpha: float, K: int) -> TridiagonalSymmetric:
    k = np.arange(K, dtype=float)
    diag = 2.0 * k + 1.0 + alpha
    off = np.sqrt((k[:-1] + 1.0) * (k[:-1] + 1.0 + alpha))
    return TridiagonalSymmetric(diag=diag, offdiag=off)


def gauss_laguerre_rule(alpha: float, K: int) -> QuadratureRule:
    """K-point rule, exact for polynomials of degree <= 2K-1."""
    if alpha <= -1.0:
        raise InvalidAlphaError(f"weight exponent must exceed -1, got {alpha}")
    if K < 1:
        raise ValueError(f"rule needs at least one node, got K={K}")

    x = tridiag_eigenvalues(jacobi_matrix(alpha, K)).values.copy()

    below, at, _, _ = laguerre_scaled_tail(K, alpha, x)
    derivative = (K * at - (K + alpha) * below) / x
    x = x - at / derivative

    _, _, above, log_scale = laguerre_scaled_tail(K, alpha, x)
    log_w = (
        log_gamma(K + alpha + 1) - log_gamma(K + 1) + np.log(x)
        - 2.0 * np.log(K + 1) - 2.0 * (np.log(np.abs(above)) + log_scale)
    )
    sqrt_weights = np.exp(0.5 * log_w)
    return QuadratureRule(
        alpha=float(alpha),
        nodes=x,
        weights=sqrt_weights**2,
        sqrt_weights=sqrt_weights,
        log_weights=log_w,
    )
