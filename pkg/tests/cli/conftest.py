import pytest
from click.testing import CliRunner

from app.core.enums import Design
from app.domain.schemas import ModelParams
from app.repositories.series import write_series_csv
from app.services.simulator import simulate_design

# ----------------------------------------------------------------------
# Runner and config files
# ----------------------------------------------------------------------


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def write_config(tmp_path):
    def _write(text: str, name: str = "run.cfg") -> str:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)
    return _write


@pytest.fixture
def quick_config(write_config):
    """Settings small enough for an estimation inside the unit suite."""
    return write_config("J = 60\nm = 60\nT = 150\nstarts = 1\nmax_iter = 150\n", name="quick.cfg")


# ----------------------------------------------------------------------
# Series files
# ----------------------------------------------------------------------


@pytest.fixture(scope="module")
def small_sim():
    return simulate_design(ModelParams.baseline(d=0.35), Design.M1, 150, burn_in=60, truncation=60, seed=5)


@pytest.fixture
def series_csv(tmp_path, small_sim):
    return str(write_series_csv(tmp_path / "series.csv", small_sim))
