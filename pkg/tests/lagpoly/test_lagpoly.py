import numpy as np
import pytest

from app.core.errors import DomainError
from app.services.lagpoly import fracdiff_coeffs, hygarch_weights, weight_tail_mass


class TestFracDiffCoeffs:
    def test_trivial_orders(self):
        """(1-L)^0 = 1 and (1-L)^1 = 1 - L."""
        assert list(fracdiff_coeffs(0.0, 5).phi) == [1.0, 0.0, 0.0, 0.0, 0.0, 0.0]
        assert list(fracdiff_coeffs(1.0, 3).phi) == [1.0, -1.0, 0.0, 0.0]

    def test_quarter_order(self):
        phi = fracdiff_coeffs(0.25, 2).phi
        np.testing.assert_allclose(phi, [1.0, -0.25, -0.09375], rtol=0, atol=1e-15)

    @pytest.mark.parametrize("d", [0.25, 0.35, 0.45])
    def test_first_two_coefficients(self, d):
        phi = fracdiff_coeffs(d, 10).phi
        assert phi[0] == 1.0
        assert abs(phi[1] + d) < 1e-14
        assert abs(phi[2] - d * (d - 1.0) / 2.0) < 1e-14

    @pytest.mark.parametrize("d", [0.1, 0.25, 0.45, 0.8])
    def test_matches_gamma_ratios(self, d, phi_oracle):
        phi = fracdiff_coeffs(d, 50).phi
        np.testing.assert_allclose(phi, phi_oracle(d, 50), rtol=1e-10, atol=0)

    @pytest.mark.parametrize("d", [0.25, 0.45])
    def test_hyperbolic_partial_sums(self, d):
        """-sum_{1..J} phi_j is increasing, stays in (0, 1) and reaches 0.8 by J = 1000."""
        phi = fracdiff_coeffs(d, 1000).phi
        assert np.all(phi[1:] < 0.0)
        mass = np.cumsum(-phi[1:])
        assert np.all(np.diff(mass) > 0.0)
        assert 0.8 < mass[-1] < 1.0

    def test_no_overflow_at_long_lags(self):
        phi = fracdiff_coeffs(0.35, 5000).phi
        assert np.all(np.isfinite(phi))

    def test_read_only(self):
        phi = fracdiff_coeffs(0.3, 4).phi
        with pytest.raises(ValueError):
            phi[1] = 0.0

    @pytest.mark.parametrize("d,J", [(-0.1, 5), (1.2, 5), (0.3, -1)])
    def test_domain(self, d, J):
        with pytest.raises(DomainError):
            fracdiff_coeffs(d, J)


class TestHygarchWeights:
    def test_degenerate_filter_vanishes(self):
        weights = hygarch_weights(0.0, 0.4, 0.4, 0.9, 10)
        assert np.all(weights.w == 0.0)
        assert weights.c[0] == 1.0

    def test_first_weight(self, baseline_filter):
        """w_1 = delta (d + gamma - beta)."""
        weights = hygarch_weights(0.25, J=5, **baseline_filter)
        assert weights.lag(1) == pytest.approx(-0.045, abs=1e-15)

    def test_second_weight_against_oracle(self, baseline_filter, c_oracle):
        weights = hygarch_weights(0.45, J=2, **baseline_filter)
        expected = -baseline_filter["delta"] * c_oracle(0.45, 0.4, 0.1, 2)[2]
        assert abs(weights.lag(2) - expected) < 1e-12

    def test_random_parameters_against_oracle(self, c_oracle):
        rng = np.random.default_rng(7)
        for _ in range(200):
            d = rng.uniform(0.0, 0.99)
            beta, gamma = rng.uniform(-0.99, 0.99, size=2)
            weights = hygarch_weights(d, beta, gamma, 1.0, 200)
            np.testing.assert_allclose(weights.c, c_oracle(d, beta, gamma, 200), rtol=0, atol=1e-10)
            np.testing.assert_array_equal(weights.w, -weights.c[1:])

    def test_c_recursion(self, baseline_filter):
        weights = hygarch_weights(0.35, J=50, **baseline_filter)
        phi = fracdiff_coeffs(0.35, 50).phi
        g = phi[1:] - 0.1 * phi[:-1]
        np.testing.assert_allclose(weights.c[1:], g + 0.4 * weights.c[:-1], atol=1e-15)

    def test_lag_index_checked(self, baseline_filter):
        weights = hygarch_weights(0.35, J=3, **baseline_filter)
        with pytest.raises(IndexError):
            weights.lag(0)
        with pytest.raises(IndexError):
            weights.lag(4)

    @pytest.mark.parametrize("d,beta,J", [(0.3, 1.0, 5), (0.3, -1.2, 5), (1.0, 0.4, 5), (0.3, 0.4, 0)])
    def test_domain(self, d, beta, J):
        with pytest.raises(DomainError):
            hygarch_weights(d, beta, 0.1, 0.9, J)


class TestWeightTailMass:
    def test_zero_weights(self):
        assert weight_tail_mass(hygarch_weights(0.0, 0.2, 0.2, 0.9, 20)) == 0.0

    def test_single_lag(self, baseline_filter):
        assert weight_tail_mass(hygarch_weights(0.25, J=1, **baseline_filter)) == pytest.approx(0.045, abs=1e-15)

    def test_monotone_in_truncation(self, baseline_filter):
        short = weight_tail_mass(hygarch_weights(0.35, J=1000, **baseline_filter))
        long = weight_tail_mass(hygarch_weights(0.35, J=2000, **baseline_filter))
        assert long >= short
