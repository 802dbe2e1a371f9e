from dataclasses import dataclass
from typing import Optional
import logging

import numpy as np

from app.core.config import settings
from app.core.errors import DataError
from app.domain.schemas import InterceptSpec, ModelParams
from app.domain.series import SeriesPair
from app.services.intercepts import intercept_values
from app.services.lagpoly import LagPolynomial

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FilterOutput:
    log_h: np.ndarray
    u: np.ndarray
    z: np.ndarray
    J: int
    presample_fill: float


def filter_volatility(
    series: SeriesPair,
    params: ModelParams,
    spec: InterceptSpec,
    J: int = settings.TRUNCATION,
    presample: Optional[float] = None,
    validate: bool = True,
) -> FilterOutput:
    """
    Recover log h_t, z_t and u_t from observed returns and realized measures.

    Lags reaching before t = 1 are filled with `presample`, by default the
    sample mean of log x.
    """
    if validate:
        series.validate()
    if spec.T != series.T:
        raise DataError(f"intercept spec covers T={spec.T} but the series has T={series.T}")

    log_x = np.log(series.x)
    fill = float(np.mean(log_x)) if presample is None else float(presample)
    weights = LagPolynomial.hygarch_weights(params.d, params.beta, params.gamma, params.delta, J)

    padded = np.concatenate([np.full(J, fill), log_x])
    kernel = np.concatenate([[0.0], weights.w])
    lagged = np.convolve(padded, kernel)[J:J + series.T]

    omega = intercept_values(spec.for_params(params), params.omega0)
    log_h = omega + lagged
    z = series.r * np.exp(-0.5 * log_h)
    u = log_x - params.xi - params.phi_meas * log_h - params.tau1 * z - params.tau2 * (z * z - 1.0)
    return FilterOutput(log_h=log_h, u=u, z=z, J=J, presample_fill=fill)
