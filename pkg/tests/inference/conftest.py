import math

import numpy as np
import pytest

from app.core.enums import Design
from app.domain.schemas import ModelParams, OptimizerOptions
from app.domain.series import SeriesPair
from app.services.simulator import simulate_design

QUICK_J = 100


@pytest.fixture(scope="module")
def baseline():
    return ModelParams.baseline(d=0.35)


@pytest.fixture(scope="module")
def short_sim(baseline):
    return simulate_design(baseline, Design.M1, 300, burn_in=200, truncation=QUICK_J, seed=99)


@pytest.fixture(scope="module")
def short_series(short_sim):
    return short_sim.to_series_pair()


@pytest.fixture
def quick_options():
    return OptimizerOptions(n_starts=1, max_iter=300, truncation=QUICK_J, std_errors=False)


@pytest.fixture
def random_series():
    rng = np.random.default_rng(123)

    def _make(T: int = 50) -> SeriesPair:
        return SeriesPair(r=rng.standard_normal(T), x=np.exp(rng.normal(0.3, 0.5, T)))
    return _make


def straight_line_loglik(r, x, p: ModelParams, J: int) -> float:
    """Scalar-loop log-likelihood with a constant intercept; shares no code with the package."""
    T = len(r)
    phi = [1.0]
    for j in range(1, J + 1):
        phi.append(phi[-1] * (j - 1 - p.d) / j)
    c = [1.0]
    for j in range(1, J + 1):
        c.append(phi[j] - p.gamma * phi[j - 1] + p.beta * c[j - 1])
    w = [-p.delta * cj for cj in c]

    log_x = [math.log(v) for v in x]
    fill = sum(log_x) / T
    total = 0.0
    for t in range(T):
        lh = p.omega0
        for j in range(1, J + 1):
            lh += w[j] * (log_x[t - j] if t - j >= 0 else fill)
        z = r[t] / math.exp(0.5 * lh)
        u = log_x[t] - p.xi - p.phi_meas * lh - p.tau1 * z - p.tau2 * (z * z - 1.0)
        nu = p.nu
        log_t = (
            math.lgamma((nu + 1.0) / 2.0) - math.lgamma(nu / 2.0)
            - 0.5 * math.log(math.pi * (nu - 2.0))
            - 0.5 * (nu + 1.0) * math.log(1.0 + z * z / (nu - 2.0))
        )
        log_n = -0.5 * (math.log(2.0 * math.pi) + math.log(p.sigma_u2) + u * u / p.sigma_u2)
        total += log_t - 0.5 * lh + log_n
    return total


@pytest.fixture
def loglik_oracle():
    return straight_line_loglik
