import numpy as np
import pytest

from app.core.enums import Design
from app.core.errors import DataError
from app.domain.schemas import InterceptSpec, ModelParams
from app.domain.series import SeriesPair
from app.services.inference.filtering import filter_volatility
from app.services.intercepts import make_design
from app.services.simulator import simulate_design


class TestFilterVolatility:
    def test_flat_filter_returns_intercept(self, random_series):
        series = random_series(40)
        params = ModelParams(gamma=0.2, beta=0.2, d=0.0, omega0=0.3)
        out = filter_volatility(series, params, InterceptSpec.fourier(40), J=10)
        assert np.all(out.log_h == 0.3)

    def test_measurement_residual(self, short_series, baseline):
        out = filter_volatility(short_series, baseline, InterceptSpec.fourier(300), J=50)
        p = baseline
        log_x = np.log(short_series.x)
        expected = log_x - p.xi - p.phi_meas * out.log_h - p.tau1 * out.z - p.tau2 * (out.z ** 2 - 1.0)
        np.testing.assert_array_equal(out.u, expected)
        assert out.presample_fill == pytest.approx(log_x.mean())

    def test_recovers_true_variance(self, baseline):
        """With the generating weights, every lag beyond the presample is observed."""
        sim = simulate_design(baseline, Design.M1, 3000, truncation=1000, seed=17)
        out = filter_volatility(sim.to_series_pair(), baseline, make_design(Design.M1, 3000), J=1000)
        assert np.max(np.abs(out.log_h[1500:] - sim.log_h[1500:])) < 1e-6
        assert np.max(np.abs(out.log_h[1000:] - sim.log_h[1000:])) < 1e-2

    def test_order_zero_equals_zero_harmonics(self, short_series, baseline):
        spec = InterceptSpec.fourier(300)
        plain = filter_volatility(short_series, baseline, spec, J=50)
        nested = filter_volatility(short_series, baseline.with_order(2), spec, J=50)
        np.testing.assert_array_equal(plain.log_h, nested.log_h)

    def test_explicit_presample(self, short_series, baseline):
        out = filter_volatility(short_series, baseline, InterceptSpec.fourier(300), J=20, presample=0.0)
        assert out.presample_fill == 0.0

    def test_rejects_non_positive_measure(self, baseline):
        series = SeriesPair(r=np.zeros(5), x=np.array([1.0, 1.0, -1.0, 1.0, 1.0]))
        with pytest.raises(DataError, match="row 3"):
            filter_volatility(series, baseline, InterceptSpec.fourier(5), J=3)

    def test_rejects_non_finite_return(self, baseline):
        series = SeriesPair(r=np.array([0.0, np.nan]), x=np.ones(2))
        with pytest.raises(DataError, match="column 'r'"):
            filter_volatility(series, baseline, InterceptSpec.fourier(2), J=3)

    def test_spec_length_checked(self, short_series, baseline):
        with pytest.raises(DataError):
            filter_volatility(short_series, baseline, InterceptSpec.fourier(10), J=5)

    def test_misaligned_series(self):
        with pytest.raises(DataError):
            SeriesPair(r=np.zeros(3), x=np.ones(4))
