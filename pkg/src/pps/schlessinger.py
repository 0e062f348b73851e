"""Continued-fraction rational interpolation (Schlessinger point method).

    R(t) = f_1 / (1 + c_1 (t - x_1) / (1 + c_2 (t - x_2) / (1 + ...)))

Each c_l is fixed so that R passes through point l+1; deeper terms vanish at
that point, so earlier points stay matched.
"""

from dataclasses import dataclass

import numpy as np

from src.errors import DegeneratePointError

# a new point already reproduced to this relative accuracy ends the fraction
_MATCHED = 1e-12


@dataclass(frozen=True)
class RationalFit:
    support_x: np.ndarray
    support_f: np.ndarray
    cf_coeffs: np.ndarray  # c_1 .. c_{M-1}

    @property
    def order(self) -> int:
        return int(self.support_x.size)

    def evaluate(self, t):
        t = np.asarray(t, dtype=float)
        with np.errstate(divide="ignore", invalid="ignore"):
            tail = np.ones_like(t)
            for c, x in zip(self.cf_coeffs[::-1], self.support_x[-2::-1]):
                tail = 1.0 + c * (t - x) / tail
            value = self.support_f[0] / tail
        return float(value) if value.ndim == 0 else value

    __call__ = evaluate


def _next_coefficient(x: list[float], f: list[float], coeffs: list[float], l: int) -> float:
    """c_l from the first l coefficients' worth of fraction evaluated at x_{l+1}."""
    t = x[l]
    if f[l] == 0.0:
        raise DegeneratePointError(f"zero function value at support point {l}")
    D = f[0] / f[l]
    for j in range(1, l):
        c = coeffs[j - 1]
        if c == 0.0:
            if abs(D - 1.0) <= _MATCHED * max(abs(D), 1.0):
                return 0.0
            raise DegeneratePointError(f"fraction ended at depth {j} but point {l} is not matched")
        if D == 1.0:
            raise DegeneratePointError(f"vanishing denominator at depth {j} for point {l}")
        D = c * (t - x[j - 1]) / (D - 1.0)
    if abs(D - 1.0) <= _MATCHED * max(abs(D), 1.0):
        return 0.0
    return (D - 1.0) / (t - x[l - 1])


def schlessinger_fit(x, f) -> RationalFit:
    """Rational interpolant through all points (x_i, f_i); x must be distinct."""
    x = [float(v) for v in x]
    f = [float(v) for v in f]
    if len(x) != len(f):
        raise ValueError(f"x and f differ in length ({len(x)} vs {len(f)})")
    if not x:
        raise ValueError("need at least one support point")
    if len(set(x)) != len(x):
        raise DegeneratePointError("support abscissae must be distinct")

    coeffs: list[float] = []
    try:
        for l in range(1, len(x)):
            coeffs.append(_next_coefficient(x, f, coeffs, l))
    except ZeroDivisionError as exc:
        raise DegeneratePointError(f"Schlessinger recursion broke down: {exc}") from exc

    return RationalFit(support_x=np.array(x), support_f=np.array(f), cf_coeffs=np.array(coeffs))
