"""The recursion polynomial B_n^mu(z; gamma) and the expansion coefficients.

B_n obeys

    z B_n = [-2mu / ((n+mu)(n+mu+1)) + gamma (n+mu+1/2)^2] B_n
            - n / ((n+mu)(n+mu+1/2)) B_{n-1}
            + (n+2mu+1) / ((n+mu+1)(n+mu+1/2)) B_{n+1}

with B_0 = 1, B_{-1} = 0. With z and gamma taken from the physical
parameters, P_n = B_n solves the energy recursion, and the wavefunction
coefficients are F_n = G_n B_n.
"""

import math
from dataclasses import dataclass

import numpy as np

from src.errors import RecursionPoleError
from src.orthopoly.special import pochhammer
from src.tra.coefficients import recursion_matrix
from src.tra.params import BasisParams, PhysicalParams, TraPolyParams, tra_params


@dataclass(frozen=True)
class ExpansionCoefficients:
    F: np.ndarray
    G: np.ndarray
    B: np.ndarray
    f0: float = 1.0

    @property
    def P(self) -> np.ndarray:
        return self.B

    @property
    def terms(self) -> int:
        return int(self.B.size)


def b_recursion_coefficients(tp: TraPolyParams, mu: float, N: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(diagonal, B_{n-1} factor, B_{n+1} factor) of the B_n recursion for n = 0..N."""
    diag = np.empty(N + 1)
    lower = np.empty(N + 1)
    upper = np.empty(N + 1)
    try:
        for n in range(N + 1):
            diag[n] = -2 * mu / ((n + mu) * (n + mu + 1)) + tp.gamma * (n + mu + 0.5) ** 2
            lower[n] = -n / ((n + mu) * (n + mu + 0.5))
            upper[n] = (n + 2 * mu + 1) / ((n + mu + 1) * (n + mu + 0.5))
    except ZeroDivisionError as exc:
        raise RecursionPoleError(f"B recursion has a pole at n={n}, mu={mu}") from exc
    return diag, lower, upper


def b_poly_sequence(tp: TraPolyParams, mu: float, N: int) -> np.ndarray:
    """[B_0, ..., B_N] by ascending recursion."""
    diag, lower, upper = b_recursion_coefficients(tp, mu, N)
    B = np.empty(N + 1)
    B[0] = 1.0
    prev = 0.0
    for n in range(N):
        if upper[n] == 0.0:
            raise RecursionPoleError(f"B_{n + 1} undefined: n + 2mu + 1 = 0 at mu={mu}")
        B[n + 1] = ((tp.z - diag[n]) * B[n] - lower[n] * prev) / upper[n]
        prev = B[n]
    return B


def g_coefficients(mu: float, N: int) -> np.ndarray:
    """G_n = (2n+2mu+1) (2mu+1)_n / ((-1)^n n! (2mu+1))."""
    return np.array(
        [
            (2 * n + 2 * mu + 1) * pochhammer(2 * mu + 1, n) / ((-1) ** n * math.factorial(n) * (2 * mu + 1))
            for n in range(N + 1)
        ]
    )


def expansion_coeffs(p: PhysicalParams, bp: BasisParams) -> ExpansionCoefficients:
    B = b_poly_sequence(tra_params(p), bp.mu, bp.N)
    G = g_coefficients(bp.mu, bp.N)
    return ExpansionCoefficients(F=G * B, G=G, B=B)


def recursion_residuals(p: PhysicalParams, bp: BasisParams, values, form: str = "P") -> np.ndarray:
    """Relative residuals of rows 0..N-1 of the energy recursion at y = (l+1/2)^2.

    ``form="P"`` checks the symmetric-ready form satisfied by P_n = B_n;
    ``form="F"`` checks the original form satisfied by the wavefunction
    coefficients F_n. Row N needs the truncated term n = N+1 and is skipped.
    Each residual is scaled by the sum of magnitudes of the terms it combines.
    """
    values = np.asarray(values, dtype=float)
    mu, N = bp.mu, bp.N
    if values.size != N + 1:
        raise ValueError(f"expected {N + 1} coefficients, got {values.size}")
    y = p.target
    c = p.coupling

    if form == "P":
        J = recursion_matrix(p, bp)
        terms = J * values[np.newaxis, :]
        terms[np.diag_indices(N + 1)] -= y * values
    elif form == "F":
        terms = np.zeros((N + 1, N + 1))
        for n in range(N + 1):
            terms[n, n] = ((2 * n + 2 * mu + 1) ** 2 + mu * c / ((n + mu) * (n + mu + 1)) - y) * values[n]
            if n + 1 <= N:
                terms[n, n + 1] = c * (n + 1) / ((n + mu + 1) * (2 * n + 2 * mu + 3)) * values[n + 1]
            if n >= 1:
                terms[n, n - 1] = -c * (n + 2 * mu) / ((n + mu) * (2 * n + 2 * mu - 1)) * values[n - 1]
    else:
        raise ValueError(f"unknown recursion form {form!r}")

    rows = terms[:N]
    scale = np.abs(rows).sum(axis=1)
    scale[scale == 0] = 1.0
    return np.abs(rows.sum(axis=1)) / scale
