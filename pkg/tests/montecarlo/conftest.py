import pytest

from app.core.enums import Design
from app.domain.schemas import OptimizerOptions, StudyConfig
from app.services.montecarlo import CellResult, MonteCarloReport, ReplicationRecord


@pytest.fixture
def tiny_study():
    """A study small enough to run inside the unit suite."""
    def _make(**overrides) -> StudyConfig:
        values = dict(
            d_values=(0.45, 0.25), k_values=(0,), designs=(Design.M2, Design.M1),
            T=120, replications=2, base_seed=77, truncation=40, burn_in=40,
            optimizer=OptimizerOptions(n_starts=1, max_iter=120, std_errors=False),
            n_workers=1,
        )
        values.update(overrides)
        return StudyConfig(**values)
    return _make


@pytest.fixture
def synthetic_records():
    def _make(d: float, d_hats, design: Design = Design.M1, k: int = 0, converged=None):
        converged = converged or [True] * len(d_hats)
        return [
            ReplicationRecord(design=design, d=d, k=k, rep=rep, d_hat=value, converged=ok, loglik=-100.0)
            for rep, (value, ok) in enumerate(zip(d_hats, converged))
        ]
    return _make


@pytest.fixture
def handmade_report(tiny_study):
    cells = [
        CellResult(Design.M1, 0.25, 0, 0.0539, 0.0932, 0.0761, 500, 497),
        CellResult(Design.M1, 0.45, 1, 1.0 / 3.0, 0.1 + 0.2, 2.0 ** -0.5, 500, 500),
        CellResult(Design.M3, 0.25, 3, -1e-17, 123.456789012345678, 5e-300, 100, 99),
    ]
    return MonteCarloReport(config=tiny_study(), cells=cells, records=[])
