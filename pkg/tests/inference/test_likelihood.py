import math

import numpy as np
import pytest

from app.core.config import settings
from app.domain.schemas import InterceptSpec, ModelParams
from app.domain.series import SeriesPair
from app.services.inference.likelihood import loglik, loglik_parts


class TestLoglik:
    def test_single_observation(self):
        series = SeriesPair(r=np.array([0.0]), x=np.array([1.0]))
        params = ModelParams(omega0=0.0, xi=0.0, phi_meas=1.0, tau1=0.0, tau2=0.0, sigma_u2=1.0, nu=3.0)
        value = loglik(series, params, InterceptSpec.fourier(1), J=5)
        expected = math.log(2.0 / math.pi) - 0.5 * math.log(2.0 * math.pi)
        assert value == pytest.approx(expected, abs=1e-12)
        assert value == pytest.approx(-1.370522, abs=1e-6)

    def test_parts_add_up(self, short_series, baseline):
        spec = InterceptSpec.fourier(short_series.T)
        ret, meas = loglik_parts(short_series, baseline, spec, J=50)
        assert loglik(short_series, baseline, spec, J=50) == pytest.approx(ret + meas, abs=1e-9)

    def test_matches_straight_line_oracle(self, random_series, loglik_oracle):
        rng = np.random.default_rng(5)
        for _ in range(20):
            series = random_series(50)
            params = ModelParams(
                omega0=rng.uniform(-0.2, 0.4), gamma=rng.uniform(0.0, 0.6), beta=rng.uniform(0.0, 0.8),
                d=rng.uniform(0.05, 0.9), delta=rng.uniform(0.3, 1.2), nu=rng.uniform(2.5, 12.0),
                xi=rng.uniform(-0.3, 0.3), phi_meas=rng.uniform(0.5, 1.2), tau1=rng.uniform(-0.1, 0.1),
                tau2=rng.uniform(0.0, 0.1), sigma_u2=rng.uniform(0.2, 1.0),
            )
            value = loglik(series, params, InterceptSpec.fourier(50), J=50)
            assert value == pytest.approx(loglik_oracle(series.r, series.x, params, 50), abs=1e-9, rel=1e-12)

    def test_out_of_domain_sentinel(self, short_series, baseline):
        spec = InterceptSpec.fourier(short_series.T)
        no_noise = baseline.model_copy(update={"sigma_u2": 0.0})
        assert loglik(short_series, no_noise, spec, J=20) == settings.LOGLIK_SENTINEL
        heavy = baseline.model_copy(update={"nu": 2.0})
        assert loglik(short_series, heavy, spec, J=20) == settings.LOGLIK_SENTINEL

    def test_non_finite_path_sentinel(self, short_series, baseline):
        """An exploding filter yields inf/nan terms, reported as the sentinel."""
        spec = InterceptSpec.fourier(short_series.T)
        wild = baseline.model_copy(update={"omega0": 1e308})
        assert loglik(short_series, wild, spec, J=20) == settings.LOGLIK_SENTINEL
