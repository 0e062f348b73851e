"""Gamma-function helpers and the Pochhammer symbol."""

import numpy as np
from scipy import special


def pochhammer(a: float, n: int) -> float:
    """Shifted factorial (a)_n = a (a+1) ... (a+n-1).

    Evaluated as a running product so negative (and negative-integer) ``a``
    is exact; (a)_0 = 1.
    """
    if n < 0:
        raise ValueError(f"pochhammer needs n >= 0, got {n}")
    result = 1.0
    for k in range(n):
        result *= a + k
    return result


def log_gamma(x):
    """log|Gamma(x)|; safe for arguments where Gamma itself overflows."""
    return special.gammaln(x)


def gamma(x):
    return special.gamma(x)


def exp_if_representable(log_value: float) -> float:
    """exp(log_value), or inf when it would overflow a double."""
    with np.errstate(over="ignore"):
        return float(np.exp(log_value))
