import numpy as np
import pytest

from app.domain.schemas import ModelParams


@pytest.fixture
def baseline():
    """Parameters of the simulation study at d = 0.35."""
    return ModelParams.baseline()


@pytest.fixture
def random_params():
    """Draws spanning both certified and uncertified parameter sets."""
    rng = np.random.default_rng(2024)

    def _draw(n: int):
        for _ in range(n):
            yield ModelParams(
                omega0=rng.uniform(0.0, 1.0),
                gamma=rng.uniform(-0.9, 0.9),
                beta=rng.uniform(-0.9, 0.9),
                d=rng.uniform(0.05, 0.95),
                delta=rng.uniform(0.1, 2.0),
                phi_meas=rng.uniform(0.2, 1.5),
                xi=rng.uniform(-0.5, 0.5),
            )
    return _draw
