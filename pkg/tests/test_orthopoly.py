"""Tests for Bessel and Laguerre polynomials and Gauss-Laguerre quadrature."""

import math

import numpy as np
import pytest

from src.errors import DegreeOutOfRangeError, InvalidAlphaError, InvalidBasisError
from src.orthopoly import (
    BesselParams,
    bessel_eval,
    bessel_generating_function,
    bessel_inner_product,
    bessel_norm,
    bessel_sequence,
    bessel_series,
    bessel_via_laguerre,
    gauss_laguerre_rule,
    laguerre_eval,
    laguerre_functions,
    laguerre_table,
    pochhammer,
)
from src.orthopoly.identities import (
    MU_GRID,
    X_GRID,
    admissible_degrees,
    backward_shift_residual,
    differential_equation_residual,
    first_derivative,
    forward_shift_residual,
    lowering_identity_residual,
    second_derivative,
    triple_agreement,
)
from src.orthopoly.special import log_gamma


def _close(a, b, tol):
    return abs(a - b) <= tol * max(abs(a), abs(b), 1.0)


# ---------------------------------------------------------------------------
# Special functions
# ---------------------------------------------------------------------------

class TestPochhammer:

    def test_empty_product(self):
        assert pochhammer(3.7, 0) == 1.0

    def test_half_integer(self):
        assert pochhammer(0.5, 2) == pytest.approx(0.75)

    def test_hits_zero_for_negative_integer(self):
        assert pochhammer(-2.0, 3) == 0.0

    def test_negative_n_rejected(self):
        with pytest.raises(ValueError):
            pochhammer(1.0, -1)


class TestLaguerre:

    @pytest.mark.parametrize("alpha", [-0.5, 0.0, 2.3])
    def test_degree_two_closed_form(self, alpha):
        x = 1.7
        expected = (x**2 - 2 * (alpha + 2) * x + (alpha + 1) * (alpha + 2)) / 2
        assert laguerre_eval(2, alpha, x) == pytest.approx(expected, rel=1e-13)

    def test_vectorized(self):
        x = np.linspace(0.0, 3.0, 7)
        values = laguerre_eval(3, 1.0, x)
        assert values.shape == (7,)
        assert values[0] == pytest.approx(4.0)  # L_3^1(0) = C(4, 3)

    def test_functions_match_weighted_table(self):
        alpha = 1.5
        rule = gauss_laguerre_rule(alpha, 8)
        k = np.arange(6)
        cn = np.exp(0.5 * (log_gamma(k + 1.0) - log_gamma(k + alpha + 1.0)))
        expected = cn[:, None] * laguerre_table(5, alpha, rule.nodes) * rule.sqrt_weights
        assert np.allclose(laguerre_functions(5, alpha, rule.nodes, rule.log_weights), expected, rtol=1e-11, atol=1e-14)

    def test_functions_finite_at_large_degree(self):
        rule = gauss_laguerre_rule(3.5, 400)
        table = laguerre_functions(399, 3.5, rule.nodes, rule.log_weights)
        assert np.all(np.isfinite(table))
        assert np.allclose(table @ table.T, np.eye(400), atol=1e-8)


# ---------------------------------------------------------------------------
# Gauss-Laguerre
# ---------------------------------------------------------------------------

class TestQuadrature:

    def test_exact_for_low_degree_monomials(self):
        alpha, K = 0.5, 6
        rule = gauss_laguerre_rule(alpha, K)
        for j in range(2 * K):
            expected = math.gamma(alpha + j + 1)
            assert rule.integrate(lambda u: u**j) == pytest.approx(expected, rel=1e-11)

    def test_single_node(self):
        rule = gauss_laguerre_rule(1.5, 1)
        assert rule.nodes[0] == pytest.approx(2.5)
        assert rule.weights[0] == pytest.approx(math.gamma(2.5))

    def test_nodes_positive_and_sorted(self):
        rule = gauss_laguerre_rule(-0.4, 20)
        assert rule.size == 20
        assert np.all(rule.nodes > 0)
        assert np.all(np.diff(rule.nodes) > 0)
        assert np.all(rule.weights > 0)

    def test_alpha_at_limit_rejected(self):
        with pytest.raises(InvalidAlphaError):
            gauss_laguerre_rule(-1.0, 5)

    def test_log_weights_match_weights(self):
        rule = gauss_laguerre_rule(2.5, 30)
        assert np.allclose(np.exp(rule.log_weights), rule.weights, rtol=1e-13, atol=0)

    def test_log_weights_survive_underflow(self):
        rule = gauss_laguerre_rule(3.5, 400)
        assert np.all(np.isfinite(rule.log_weights))
        assert rule.log_weights[-1] < -745
        assert rule.weights[-1] == 0.0


# ---------------------------------------------------------------------------
# Bessel polynomials
# ---------------------------------------------------------------------------

class TestBesselParams:

    def test_largest_degree_is_strict(self):
        assert BesselParams.for_mu(-12.3).max_degree == 11
        # -mu - 1/2 = 12 exactly: 12 itself is not admissible
        assert BesselParams.for_mu(-12.5).max_degree == 11

    def test_inadmissible_degree_rejected(self):
        with pytest.raises(InvalidBasisError):
            BesselParams(mu=-5.0, max_degree=5)

    def test_no_admissible_degree(self):
        with pytest.raises(InvalidBasisError):
            BesselParams.for_mu(-0.4)


class TestBesselEvaluation:

    MU = -12.3

    def test_degree_zero_and_one(self):
        p = BesselParams.for_mu(self.MU)
        assert bessel_eval(p, 0, 0.4) == 1.0
        assert bessel_eval(p, 1, 0.4) == pytest.approx(1 + (2 * self.MU + 2) * 0.4)

    def test_value_at_origin_is_one(self):
        p = BesselParams.for_mu(self.MU)
        rows = bessel_sequence(p, 0.0)
        assert np.allclose(rows, 1.0)

    @pytest.mark.parametrize("x", [0.01, 0.1, 0.5, 1.0])
    def test_recurrence_matches_series(self, x):
        p = BesselParams.for_mu(self.MU)
        rows = bessel_sequence(p, x)
        for n in range(p.max_degree + 1):
            assert _close(rows[n], bessel_series(self.MU, n, x), 1e-9), n

    @pytest.mark.parametrize("x", [0.05, 0.3, 2.0])
    def test_laguerre_form_matches_series(self, x):
        for n in range(8):
            assert _close(bessel_via_laguerre(self.MU, n, x), bessel_series(self.MU, n, x), 1e-9)

    def test_vectorized_shape(self):
        p = BesselParams.for_mu(self.MU)
        x = np.linspace(0.0, 1.0, 5)
        assert bessel_sequence(p, x).shape == (p.max_degree + 1, 5)

    def test_degree_above_bound_rejected(self):
        p = BesselParams.for_mu(self.MU)
        with pytest.raises(DegreeOutOfRangeError):
            bessel_eval(p, p.max_degree + 1, 0.1)


class TestBesselOrthogonality:

    MU = -6.3

    def test_orthogonal_under_weight(self):
        p = BesselParams.for_mu(self.MU)
        N = p.max_degree
        for n in range(N + 1):
            for m in range(n):
                value = bessel_inner_product(p, n, m)
                scale = math.sqrt(bessel_norm(p, n) * bessel_norm(p, m))
                assert abs(value) / scale < 1e-9, (n, m)

    def test_diagonal_matches_norm(self):
        p = BesselParams.for_mu(self.MU)
        for n in range(p.max_degree + 1):
            assert bessel_inner_product(p, n, n) == pytest.approx(bessel_norm(p, n), rel=1e-9)

    def test_norm_degree_zero(self):
        p = BesselParams.for_mu(self.MU)
        assert bessel_norm(p, 0) == pytest.approx(math.gamma(-2 * self.MU - 1), rel=1e-12)


class TestGeneratingFunction:

    def test_series_sums_to_closed_form(self):
        mu, x, t = -8.5, 0.1, 0.25
        total = sum(bessel_series(mu, n, x) * t**n / math.factorial(n) for n in range(60))
        assert total == pytest.approx(bessel_generating_function(mu, x, t), rel=1e-10)


# ---------------------------------------------------------------------------
# Bessel identities
# ---------------------------------------------------------------------------

class TestFiniteDifferences:

    def test_first_derivative_of_cubic(self):
        assert first_derivative(lambda t: t**3, 2.0) == pytest.approx(12.0, rel=1e-10)

    def test_second_derivative_of_quartic(self):
        assert second_derivative(lambda t: t**4, 1.5) == pytest.approx(27.0, rel=1e-6)


@pytest.mark.parametrize("mu", MU_GRID)
class TestBesselIdentities:

    def test_differential_equation(self, mu):
        for n in admissible_degrees(mu, cap=4):
            for x in X_GRID:
                assert differential_equation_residual(mu, n, x) <= 1e-5, (n, x)

    def test_forward_shift(self, mu):
        for n in admissible_degrees(mu, lowest=1):
            for x in X_GRID:
                assert forward_shift_residual(mu, n, x) <= 1e-6, (n, x)

    def test_lowering_identity(self, mu):
        for n in admissible_degrees(mu):
            for x in X_GRID:
                assert lowering_identity_residual(mu, n, x) <= 1e-11, (n, x)

    def test_backward_shift(self, mu):
        for n in admissible_degrees(mu):
            for x in X_GRID:
                assert backward_shift_residual(mu, n, x) <= 1e-6, (n, x)

    def test_three_forms_agree(self, mu):
        for n in admissible_degrees(mu):
            for x in X_GRID:
                assert triple_agreement(mu, n, x) <= 1e-9, (n, x)

