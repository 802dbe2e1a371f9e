import pytest

from app.core.enums import Design
from app.domain.schemas import InterceptSpec, ModelParams, SimConfig
from app.services.intercepts import make_design


@pytest.fixture
def baseline():
    return ModelParams.baseline(d=0.35)


@pytest.fixture
def design_config(baseline):
    """Short m1 run with a truncation small enough for quick tests."""
    def _make(T: int = 400, burn_in: int = 200, truncation: int = 200, seed: int = 11,
              design: Design = Design.M1, params: ModelParams = None) -> SimConfig:
        return SimConfig(
            params=params or baseline, intercept=make_design(design, T), T=T,
            burn_in=burn_in, truncation=truncation, seed=seed,
        )
    return _make


@pytest.fixture
def degenerate_config():
    params = ModelParams(
        omega0=0.1, gamma=0.4, beta=0.4, d=0.0, delta=0.9,
        xi=0.0, phi_meas=1.0, tau1=0.0, tau2=0.0, sigma_u2=0.0,
    )
    return SimConfig(params=params, intercept=InterceptSpec.fourier(100), T=100, burn_in=20, truncation=50)
