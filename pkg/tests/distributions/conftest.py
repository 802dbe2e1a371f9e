import pytest

from app.services.distributions import RngStream


@pytest.fixture
def stream():
    return RngStream(seed=20240501, stream_id=0)


@pytest.fixture
def make_stream():
    def _make(stream_id: int = 0, seed: int = 20240501) -> RngStream:
        return RngStream(seed=seed, stream_id=stream_id)
    return _make
