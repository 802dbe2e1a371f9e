"""
Data-generating process of the A-Realized HYGARCH(1,d,1,k) model.

Each of the m + T steps computes

    log h_t = omega_t + sum_{j=1}^{J} w_j log x_{t-j}
    r_t     = sqrt(h_t) z_t
    log x_t = xi + phi log h_t + tau1 z_t + tau2 (z_t^2 - 1) + u_t

and the first m (burn-in) steps are dropped. Presample log x values equal
omega0; burn-in steps use the intercept of t = 1, so breaks always fall
inside the retained sample.

Stream layout for RngStream(seed, stream_id): substream 0 draws z_1..z_T,
substream 1 draws u_1..u_T, substreams 2 and 3 draw the burn-in z and u
backwards from t = 0. Changing T or m therefore never reshuffles the
retained innovations, and two burn-in lengths share their most recent draws.
"""

from dataclasses import dataclass
import logging
import math

import numpy as np

from app.core.config import settings
from app.core.enums import Design
from app.core.errors import NumericalError
from app.domain.schemas import InterceptSpec, ModelParams, SimConfig
from app.domain.series import SeriesPair
from app.services.distributions import RngStream, normal_sample, std_t_sample
from app.services.intercepts import intercept_values, make_design
from app.services.lagpoly import LagPolynomial

logger = logging.getLogger(__name__)

Z_STREAM, U_STREAM, Z_BURN_STREAM, U_BURN_STREAM = 0, 1, 2, 3


@dataclass(frozen=True)
class SimulatedSeries:
    r: np.ndarray
    x: np.ndarray
    h: np.ndarray
    z: np.ndarray
    u: np.ndarray
    log_h: np.ndarray
    log_x: np.ndarray

    @property
    def T(self) -> int:
        return int(self.r.shape[0])

    def to_series_pair(self) -> SeriesPair:
        return SeriesPair(r=self.r.copy(), x=self.x.copy())


class HygarchSimulator:
    def __init__(self, cfg: SimConfig):
        self.cfg = cfg
        self.params: ModelParams = cfg.params
        self.weights = LagPolynomial.hygarch_weights(
            self.params.d, self.params.beta, self.params.gamma, self.params.delta, cfg.truncation
        )

    def _innovations(self):
        cfg, p = self.cfg, self.params
        rng = RngStream(cfg.seed, cfg.stream_id)
        sd_u = math.sqrt(p.sigma_u2)

        z = std_t_sample(rng.substream(Z_STREAM), p.nu, cfg.T)
        u = sd_u * normal_sample(rng.substream(U_STREAM), 1.0, cfg.T)
        if cfg.burn_in:
            z_burn = std_t_sample(rng.substream(Z_BURN_STREAM), p.nu, cfg.burn_in)[::-1]
            u_burn = sd_u * normal_sample(rng.substream(U_BURN_STREAM), 1.0, cfg.burn_in)[::-1]
            z = np.concatenate([z_burn, z])
            u = np.concatenate([u_burn, u])
        return z, u

    def run(self) -> SimulatedSeries:
        cfg, p = self.cfg, self.params
        m, T, J = cfg.burn_in, cfg.T, cfg.truncation
        n = m + T

        omega = intercept_values(cfg.intercept.for_params(p), p.omega0)
        omega = np.concatenate([np.full(m, omega[0]), omega])
        z, u = self._innovations()
        leverage = p.tau1 * z + p.tau2 * (z * z - 1.0)

        w_rev = self.weights.w[::-1].copy()
        buf = np.empty(J + n)
        buf[:J] = p.omega0
        log_h = np.empty(n)

        for t in range(n):
            lh = omega[t] + np.dot(w_rev, buf[t:t + J])
            if not abs(lh) <= settings.OVERFLOW_LOG_H:
                where = f"burn-in step {t + 1}" if t < m else f"t={t - m + 1}"
                raise NumericalError(
                    f"explosive path: |log h| = {abs(lh):.4g} exceeds {settings.OVERFLOW_LOG_H} at {where} "
                    f"(d={p.d}, beta={p.beta}, gamma={p.gamma}, delta={p.delta}, phi={p.phi_meas})"
                )
            log_h[t] = lh
            buf[J + t] = p.xi + p.phi_meas * lh + leverage[t] + u[t]

        log_h = log_h[m:]
        log_x = buf[J + m:]
        h = np.exp(log_h)
        z_kept, u_kept = z[m:], u[m:]
        logger.debug(f"Simulated T={T} (burn-in {m}, J={J}, stream {cfg.stream_id}): mean log h={log_h.mean():.4f}")
        return SimulatedSeries(
            r=np.sqrt(h) * z_kept,
            x=np.exp(log_x),
            h=h,
            z=z_kept.copy(),
            u=u_kept.copy(),
            log_h=log_h.copy(),
            log_x=log_x.copy(),
        )


def simulate(cfg: SimConfig) -> SimulatedSeries:
    return HygarchSimulator(cfg).run()


def simulate_design(
    params: ModelParams,
    design: Design,
    T: int,
    *,
    burn_in: int = settings.BURN_IN,
    truncation: int = settings.DGP_TRUNCATION,
    seed: int = settings.SEED,
    stream_id: int = 0,
) -> SimulatedSeries:
    """Simulate under one of the step designs m1/m2/m3."""
    cfg = SimConfig(
        params=params, intercept=make_design(design, T), T=T,
        burn_in=burn_in, truncation=truncation, seed=seed, stream_id=stream_id,
    )
    return simulate(cfg)


def simulate_fourier(
    params: ModelParams,
    T: int,
    *,
    burn_in: int = settings.BURN_IN,
    truncation: int = settings.DGP_TRUNCATION,
    seed: int = settings.SEED,
    stream_id: int = 0,
) -> SimulatedSeries:
    """Simulate with the flexible Fourier intercept carried by `params`."""
    cfg = SimConfig(
        params=params, intercept=InterceptSpec.fourier(T), T=T,
        burn_in=burn_in, truncation=truncation, seed=seed, stream_id=stream_id,
    )
    return simulate(cfg)
