"""
Joint quasi log-likelihood of returns and realized measures.

    l(r, x) = sum_t [ log f_nu(z_t) - 0.5 log h_t ]      (returns given x)
            + sum_t log N(u_t; 0, sigma_u^2)               (measurement)

with f_nu the unit-variance Student-t density. Parameter vectors outside
the hard domain (nu <= 2, sigma_u^2 <= 0) and non-finite evaluations return
settings.LOGLIK_SENTINEL so derivative-free searches can back off.
"""

from typing import Optional, Tuple
import logging

import numpy as np

from app.core.config import settings
from app.domain.schemas import InterceptSpec, ModelParams
from app.domain.series import SeriesPair
from app.services.distributions import normal_logpdf, std_t_logpdf
from app.services.inference.filtering import FilterOutput, filter_volatility

logger = logging.getLogger(__name__)


def in_domain(params: ModelParams) -> bool:
    return params.nu > 2.0 and params.sigma_u2 > 0.0 and abs(params.beta) < 1.0 and 0.0 <= params.d < 1.0


def parts_from_filter(out: FilterOutput, params: ModelParams) -> Tuple[float, float]:
    ret = float(np.sum(std_t_logpdf(out.z, params.nu) - 0.5 * out.log_h))
    meas = float(np.sum(normal_logpdf(out.u, params.sigma_u2)))
    return ret, meas


def loglik_parts(
    series: SeriesPair,
    params: ModelParams,
    spec: InterceptSpec,
    J: int = settings.TRUNCATION,
    presample: Optional[float] = None,
) -> Tuple[float, float]:
    """Return-equation and measurement-equation parts, l(r|x) and l(x)."""
    out = filter_volatility(series, params, spec, J, presample=presample)
    return parts_from_filter(out, params)


def loglik(
    series: SeriesPair,
    params: ModelParams,
    spec: InterceptSpec,
    J: int = settings.TRUNCATION,
    presample: Optional[float] = None,
    validate: bool = True,
) -> float:
    if not in_domain(params):
        return settings.LOGLIK_SENTINEL
    with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
        out = filter_volatility(series, params, spec, J, presample=presample, validate=validate)
        ret, meas = parts_from_filter(out, params)
    total = ret + meas
    if not np.isfinite(total):
        return settings.LOGLIK_SENTINEL
    return total
