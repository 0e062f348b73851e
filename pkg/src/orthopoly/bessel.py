"""Generalized Bessel polynomials Y_n^mu(x).

The family is orthogonal on (0, inf) with weight x^(2mu) e^(-1/x) and has
only finitely many admissible members: n runs over 0..N with mu < -N - 1/2.
Evaluation uses the ascending three-term recurrence

    2x Y_n = A_n Y_n + D_n Y_{n+1} - C_n Y_{n-1}

with Y_0 = 1.
"""

import math
from dataclasses import dataclass

import numpy as np

from src.errors import DegreeOutOfRangeError, InvalidBasisError, RecursionPoleError
from src.orthopoly.laguerre import laguerre_eval
from src.orthopoly.quadrature import gauss_laguerre_rule
from src.orthopoly.special import exp_if_representable, log_gamma


@dataclass(frozen=True)
class BesselParams:
    """Parameter mu and the highest admissible degree N (requires mu < -N - 1/2)."""

    mu: float
    max_degree: int

    def __post_init__(self):
        if self.max_degree < 0:
            raise InvalidBasisError(f"max_degree must be >= 0, got {self.max_degree}")
        if not self.mu < -self.max_degree - 0.5:
            raise InvalidBasisError(
                f"mu={self.mu} admits no degree {self.max_degree} (need mu < {-self.max_degree - 0.5})"
            )

    @classmethod
    def for_mu(cls, mu: float) -> "BesselParams":
        """Largest admissible N for ``mu``: the greatest integer strictly below -mu - 1/2."""
        bound = -mu - 0.5
        n = math.ceil(bound) - 1
        if n < 0:
            raise InvalidBasisError(f"mu={mu} admits no Bessel polynomial")
        return cls(mu=float(mu), max_degree=int(n))


def recurrence_coefficients(mu: float, n: int) -> tuple[float, float, float]:
    """(A_n, C_n, D_n) of the ascending recurrence."""
    try:
        A = -mu / ((n + mu) * (n + mu + 1))
        C = n / ((n + mu) * (2 * n + 2 * mu + 1))
        D = (n + 2 * mu + 1) / ((n + mu + 1) * (2 * n + 2 * mu + 1))
    except ZeroDivisionError as exc:
        raise RecursionPoleError(f"recurrence pole at n={n}, mu={mu}") from exc
    return A, C, D


def bessel_sequence(params: BesselParams, x, n_max: int | None = None) -> np.ndarray:
    """Rows Y_0(x) .. Y_{n_max}(x); ``n_max`` defaults to the highest admissible degree."""
    n_max = params.max_degree if n_max is None else n_max
    if not 0 <= n_max <= params.max_degree:
        raise DegreeOutOfRangeError(f"degree {n_max} outside 0..{params.max_degree}")

    x = np.asarray(x, dtype=float)
    rows = np.empty((n_max + 1,) + x.shape)
    rows[0] = 1.0
    prev = np.zeros_like(x)
    for n in range(n_max):
        A, C, D = recurrence_coefficients(params.mu, n)
        if D == 0.0:
            raise RecursionPoleError(f"D_{n} vanishes for mu={params.mu}")
        rows[n + 1] = ((2.0 * x - A) * rows[n] + C * prev) / D
        prev = rows[n]
    return rows


def bessel_eval(params: BesselParams, n: int, x):
    """Y_n^mu(x) for 0 <= n <= N."""
    if not 0 <= n <= params.max_degree:
        raise DegreeOutOfRangeError(f"degree {n} outside 0..{params.max_degree}")
    value = bessel_sequence(params, x, n)[n]
    return float(value) if np.ndim(value) == 0 else value


def bessel_series(mu: float, n: int, x):
    """Terminating hypergeometric form sum_k (-n)_k (n+2mu+1)_k (-x)^k / k!.

    No admissibility restriction on n; used as an independent oracle.
    """
    x = np.asarray(x, dtype=float)
    term = np.ones_like(x)
    total = np.ones_like(x)
    for k in range(n):
        term = term * (-n + k) * (n + 2 * mu + 1 + k) * (-x) / (k + 1)
        total = total + term
    return float(total) if total.ndim == 0 else total


def bessel_via_laguerre(mu: float, n: int, x):
    """n! (-x)^n L_n^{-(2n+2mu+1)}(1/x), valid for x > 0."""
    x = np.asarray(x, dtype=float)
    if np.any(x <= 0.0):
        raise ValueError("Laguerre form needs x > 0")
    value = math.factorial(n) * (-x) ** n * laguerre_eval(n, -(2 * n + 2 * mu + 1), 1.0 / x)
    return float(value) if np.ndim(value) == 0 else value


def log_bessel_norm(params: BesselParams, n: int) -> float:
    """log of the squared norm h_n = -n! Gamma(-n-2mu) / (2n+2mu+1)."""
    if not 0 <= n <= params.max_degree:
        raise DegreeOutOfRangeError(f"degree {n} outside 0..{params.max_degree}")
    mu = params.mu
    return float(log_gamma(n + 1) + log_gamma(-n - 2 * mu) - math.log(-(2 * n + 2 * mu + 1)))


def bessel_norm(params: BesselParams, n: int) -> float:
    return exp_if_representable(log_bessel_norm(params, n))


def bessel_inner_product(params: BesselParams, n: int, m: int, K: int | None = None) -> float:
    """<Y_n, Y_m> under x^(2mu) e^(-1/x), by Gauss-Laguerre after u = 1/x.

    The substitution leaves weight u^(-2mu-2-n-m) e^(-u) against the
    polynomial (u^n Y_n(1/u)) (u^m Y_m(1/u)) of degree n+m, so K > (n+m)/2
    nodes integrate it exactly.
    """
    hi = max(n, m)
    if min(n, m) < 0 or hi > params.max_degree:
        raise DegreeOutOfRangeError(f"degrees ({n}, {m}) outside 0..{params.max_degree}")
    K = n + m + 1 if K is None else K
    rule = gauss_laguerre_rule(-2.0 * params.mu - 2.0 - n - m, K)
    u = rule.nodes
    rows = bessel_sequence(params, 1.0 / u, hi)
    integrand = (u**n * rows[n]) * (u**m * rows[m])
    return float(np.dot(rule.weights, integrand))


def bessel_generating_function(mu: float, x, t):
    """Closed form of sum_n Y_n^mu(x) t^n / n!:

    2^(2mu) (1-4xt)^(-1/2) (1 + sqrt(1-4xt))^(-2mu) exp(2t / (1 + sqrt(1-4xt)))
    """
    s = np.sqrt(1.0 - 4.0 * np.asarray(x, dtype=float) * t)
    value = 2.0 ** (2 * mu) / s * (1.0 + s) ** (-2 * mu) * np.exp(2.0 * t / (1.0 + s))
    return float(value) if np.ndim(value) == 0 else value
