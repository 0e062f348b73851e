"""Residuals of the Bessel-polynomial identities.

Each function returns a deviation relative to the largest term of the
identity at that point, so values near a zero of Y_n do not blow up.
Derivatives come from 5-point central differences of the terminating
series.
"""

from src.orthopoly.bessel import BesselParams, bessel_sequence, bessel_series, bessel_via_laguerre

STEP = 1e-4


def series_scale(mu: float, n: int, x: float) -> float:
    """Sum of |terms| of the terminating series; the conditioning scale of Y_n(x)."""
    term, total = 1.0, 1.0
    for k in range(n):
        term = term * (-n + k) * (n + 2 * mu + 1 + k) * (-x) / (k + 1)
        total += abs(term)
    return total


def first_derivative(f, x: float, h: float = STEP) -> float:
    return (f(x - 2 * h) - 8 * f(x - h) + 8 * f(x + h) - f(x + 2 * h)) / (12 * h)


def second_derivative(f, x: float, h: float = STEP) -> float:
    return (-f(x - 2 * h) + 16 * f(x - h) - 30 * f(x) + 16 * f(x + h) - f(x + 2 * h)) / (12 * h * h)


def _relative(residual: float, *terms: float) -> float:
    scale = max(abs(t) for t in terms)
    return abs(residual) / scale if scale > 0 else abs(residual)


def triple_agreement(mu: float, n: int, x: float) -> float:
    """Spread of recurrence, series and Laguerre-form values of Y_n^mu(x)."""
    recurrence = bessel_sequence(BesselParams.for_mu(mu), x, n)[n]
    series = bessel_series(mu, n, x)
    laguerre = bessel_via_laguerre(mu, n, x)
    spread = max(recurrence, series, laguerre) - min(recurrence, series, laguerre)
    return float(spread / series_scale(mu, n, x))


def differential_equation_residual(mu: float, n: int, x: float) -> float:
    """x^2 Y'' + [1 + 2x(mu+1)] Y' - n(n+2mu+1) Y."""
    def f(t):
        return bessel_series(mu, n, t)

    t1 = x * x * second_derivative(f, x)
    t2 = (1 + 2 * x * (mu + 1)) * first_derivative(f, x)
    t3 = -n * (n + 2 * mu + 1) * f(x)
    floor = n * abs(n + 2 * mu + 1) * series_scale(mu, n, x)
    return _relative(t1 + t2 + t3, t1, t2, t3, floor)


def forward_shift_residual(mu: float, n: int, x: float) -> float:
    """d/dx Y_n^mu against n(n+2mu+1) Y_{n-1}^{mu+1}."""
    def f(t):
        return bessel_series(mu, n, t)

    lhs = first_derivative(f, x)
    rhs = n * (n + 2 * mu + 1) * bessel_series(mu + 1, n - 1, x)
    floor = n * abs(n + 2 * mu + 1) * series_scale(mu + 1, n - 1, x)
    return _relative(lhs - rhs, lhs, rhs, f(x), floor)


def lowering_identity_residual(mu: float, n: int, x: float) -> float:
    """2 Y_{n+1}^{mu-1} against its expansion in Y_{n-1}, Y_n, Y_{n+1} at mu."""
    lhs = 2 * bessel_series(mu - 1, n + 1, x)
    terms = (
        (n + 1) * (n + 2 * mu) / ((n + mu) * (n + mu + 1)) * bessel_series(mu, n, x),
        n * (n + 1) / ((n + mu) * (2 * n + 2 * mu + 1)) * bessel_series(mu, n - 1, x) if n else 0.0,
        (n + 2 * mu) * (n + 2 * mu + 1) / ((n + mu + 1) * (2 * n + 2 * mu + 1)) * bessel_series(mu, n + 1, x),
    )
    # cancellation in the series sets the floor, not the size of the result
    return _relative(lhs - sum(terms), lhs, *terms, 2 * series_scale(mu - 1, n + 1, x))


def backward_shift_residual(mu: float, n: int, x: float) -> float:
    """2x^2 d/dx Y_n^mu against its three-term expansion."""
    def f(t):
        return bessel_series(mu, n, t)

    lhs = 2 * x * x * first_derivative(f, x)
    c = n * (n + 2 * mu + 1)
    terms = (
        -c * f(x) / ((n + mu) * (n + mu + 1)),
        c * bessel_series(mu, n - 1, x) / ((n + mu) * (2 * n + 2 * mu + 1)) if n else 0.0,
        c * bessel_series(mu, n + 1, x) / ((n + mu + 1) * (2 * n + 2 * mu + 1)),
    )
    floor = abs(c) * series_scale(mu, n + 1, x) / abs((n + mu + 1) * (2 * n + 2 * mu + 1))
    return _relative(lhs - sum(terms), lhs, *terms, floor)


def worst_over(residual, mus, xs, degrees) -> float:
    """Largest residual(mu, n, x) over the grid; ``degrees(mu)`` yields the n to test."""
    return max(
        float(residual(mu, n, x))
        for mu in mus
        for n in degrees(mu)
        for x in xs
    )


def admissible_degrees(mu: float, lowest: int = 0, headroom: int = 0, cap: int | None = None) -> range:
    """Degrees lowest..N-headroom for mu, optionally capped."""
    top = BesselParams.for_mu(mu).max_degree - headroom
    if cap is not None:
        top = min(top, cap)
    return range(lowest, top + 1)


MU_GRID = (-4.7, -8.5, -12.3)
X_GRID = (0.1, 0.5, 1.0, 5.0)


def identity_grid(residual, lowest: int = 0, headroom: int = 0, cap: int | None = None) -> float:
    """``worst_over`` on the standard (mu, x) grid."""
    return worst_over(
        residual,
        MU_GRID,
        X_GRID,
        lambda mu: admissible_degrees(mu, lowest=lowest, headroom=headroom, cap=cap),
    )
