"""
Innovation distributions for the return and measurement equations.

Random streams: PCG64 seeded by numpy SeedSequence(entropy=seed,
spawn_key=(stream_id, *substreams)). The same (seed, stream_id, substream
path) gives the same draws on every platform numpy supports. Student-t draws
are numpy's standard_t (a normal over the root of an independent chi-square
per element) rescaled by sqrt((nu-2)/nu) to unit variance.
"""

from typing import Optional, Tuple, Union

import numpy as np
from scipy.special import gammaln

from app.core.errors import DomainError

ArrayOrFloat = Union[float, np.ndarray]

_LOG_2PI = float(np.log(2.0 * np.pi))
_MAX_U64 = 2**64 - 1


class RngStream:
    """Single-owner random stream identified by (seed, stream_id)."""

    def __init__(self, seed: int, stream_id: int = 0, path: Tuple[int, ...] = ()):
        for name, value in (("seed", seed), ("stream_id", stream_id)):
            if not 0 <= int(value) <= _MAX_U64:
                raise DomainError(f"{name} must be a 64-bit unsigned integer, got {value}")
        self.seed = int(seed)
        self.stream_id = int(stream_id)
        self.path = tuple(int(p) for p in path)
        seq = np.random.SeedSequence(entropy=self.seed, spawn_key=(self.stream_id, *self.path))
        self.generator = np.random.Generator(np.random.PCG64(seq))

    def substream(self, index: int) -> "RngStream":
        """Independent child stream; its draws do not depend on how much the parent consumed."""
        return RngStream(self.seed, self.stream_id, self.path + (index,))

    def __repr__(self) -> str:
        return f"RngStream(seed={self.seed}, stream_id={self.stream_id}, path={self.path})"


def _check_nu(nu: float):
    if not nu > 2.0:
        raise DomainError(f"degrees of freedom must exceed 2 for unit variance, got nu={nu}")


def _check_sigma2(sigma2: float):
    if not sigma2 > 0.0:
        raise DomainError(f"variance must be > 0, got sigma2={sigma2}")


def std_t_logpdf(z: ArrayOrFloat, nu: float) -> ArrayOrFloat:
    """Log-density of the unit-variance Student-t."""
    _check_nu(nu)
    a_nu = gammaln(nu / 2.0) - gammaln((nu + 1.0) / 2.0)
    z = np.asarray(z, dtype=float)
    out = -a_nu - 0.5 * np.log(np.pi * (nu - 2.0)) - 0.5 * (nu + 1.0) * np.log1p(z * z / (nu - 2.0))
    return float(out) if out.ndim == 0 else out


def normal_logpdf(u: ArrayOrFloat, sigma2: float) -> ArrayOrFloat:
    _check_sigma2(sigma2)
    u = np.asarray(u, dtype=float)
    out = -0.5 * (_LOG_2PI + np.log(sigma2) + u * u / sigma2)
    return float(out) if out.ndim == 0 else out


def std_t_sample(rng: RngStream, nu: float, size: Optional[int] = None) -> ArrayOrFloat:
    _check_nu(nu)
    # numpy draws each t variate as one normal over one gamma, element by element,
    # so a longer request extends a shorter one
    out = np.sqrt((nu - 2.0) / nu) * rng.generator.standard_t(nu, size)
    return float(out) if size is None else out


def normal_sample(rng: RngStream, sigma2: float, size: Optional[int] = None) -> ArrayOrFloat:
    _check_sigma2(sigma2)
    out = np.sqrt(sigma2) * rng.generator.standard_normal(size)
    return float(out) if size is None else out
