"""
Quasi-maximum-likelihood estimation of the A-Realized HYGARCH(1,d,1,k) model.

The search runs in the unconstrained space of `ParameterSpace` from several
deterministic starting points; the best final value wins and ties go to the
lowest start index. Standard errors come from the inverse numerical Hessian
of the negative log-likelihood, mapped back through the (diagonal) Jacobian
of the reparameterization. They are plain Hessian errors, not sandwich ones.
"""

from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple
import logging

import numdifftools as nd
import numpy as np
from scipy.optimize import minimize

from app.core.config import settings
from app.core.enums import OptimizerMethod
from app.core.errors import DomainError
from app.domain.schemas import InterceptSpec, ModelParams, OptimizerOptions
from app.domain.series import SeriesPair
from app.services.distributions import RngStream
from app.services.inference.likelihood import loglik
from app.services.inference.transforms import ParameterSpace

logger = logging.getLogger(__name__)

MIN_SAMPLE = 100
START_D = (0.3, 0.45, 0.15, 0.6, 0.2, 0.4)
START_JITTER = 0.1


@dataclass(frozen=True)
class EstimationResult:
    theta_hat: ModelParams
    loglik: float
    std_errors: Optional[Dict[str, float]]
    converged: bool
    iterations: int
    fourier_order: int
    n_evaluations: int = 0
    start_index: int = 0
    hessian_ok: bool = False
    message: str = ""
    start_logliks: Tuple[float, ...] = field(default=(), repr=False)

    def as_row(self) -> Dict[str, object]:
        """Flat record: natural parameters, their standard errors (se_*) and fit diagnostics."""
        space = ParameterSpace(self.fourier_order)
        row: Dict[str, object] = {"k": self.fourier_order}
        row.update(space.natural_dict(self.theta_hat))
        for name in space.names:
            row[f"se_{name}"] = (self.std_errors or {}).get(name, float("nan"))
        row.update(
            loglik=self.loglik, converged=self.converged, iterations=self.iterations,
            start_index=self.start_index, hessian_ok=self.hessian_ok,
        )
        return row


def numerical_gradient(f: Callable[[np.ndarray], float], x: np.ndarray, step: float = 1e-5) -> np.ndarray:
    """Central differences with a relative step per coordinate."""
    x = np.asarray(x, dtype=float)
    grad = np.empty_like(x)
    for i in range(x.size):
        h = step * max(1.0, abs(x[i]))
        e = np.zeros_like(x)
        e[i] = h
        grad[i] = (f(x + e) - f(x - e)) / (2.0 * h)
    return grad


class HygarchEstimator:
    def __init__(self, series: SeriesPair, k: int, options: Optional[OptimizerOptions] = None):
        if k < 0:
            raise DomainError(f"Fourier order must be >= 0, got {k}")
        series.validate()
        if series.T < MIN_SAMPLE:
            raise DomainError(f"estimation needs T >= {MIN_SAMPLE} observations, got {series.T}")
        self.series = series
        self.k = k
        self.options = options or OptimizerOptions()
        self.space = ParameterSpace(k)
        self.spec = InterceptSpec.fourier(series.T)
        self.n_evaluations = 0

    # ------------------------------------------------------------------
    # Objective
    # ------------------------------------------------------------------

    def loglik_at(self, params: ModelParams) -> float:
        return loglik(self.series, params, self.spec, self.options.truncation, validate=False)

    def objective(self, x: np.ndarray) -> float:
        """Negative log-likelihood in the unconstrained space."""
        self.n_evaluations += 1
        try:
            params = self.space.to_params(x)
        except ValueError:
            return -settings.LOGLIK_SENTINEL
        return -self.loglik_at(params)

    # ------------------------------------------------------------------
    # Starting points
    # ------------------------------------------------------------------

    def default_start(self) -> ModelParams:
        mean_log_x = float(np.mean(np.log(self.series.x)))
        delta = 0.9
        return ModelParams(
            omega0=(1.0 - delta) * mean_log_x,
            gamma=0.1, beta=0.4, d=START_D[0], delta=delta, nu=5.0,
            xi=0.0, phi_meas=1.0, tau1=0.0, tau2=0.0, sigma_u2=0.4,
            fourier_a=(0.0,) * self.k, fourier_b=(0.0,) * self.k,
        )

    def starting_points(self, start: Optional[ModelParams] = None) -> List[np.ndarray]:
        base = (start or self.default_start()).with_order(self.k)
        points = [self.space.to_unconstrained(base)]
        for s in range(1, self.options.n_starts):
            variant = base.model_copy(update={"d": START_D[s % len(START_D)]})
            x = self.space.to_unconstrained(variant)
            jitter = RngStream(self.options.seed, s).generator.standard_normal(x.size)
            jitter[list(self.space.names).index("d")] = 0.0
            points.append(x + START_JITTER * jitter)
        return points

    # ------------------------------------------------------------------
    # Search
    # ------------------------------------------------------------------

    def _minimize(self, x0: np.ndarray):
        opts = self.options
        if opts.method == OptimizerMethod.BFGS:
            return minimize(
                self.objective, x0, method="BFGS",
                jac=lambda x: numerical_gradient(self.objective, x),
                options={"maxiter": opts.max_iter, "gtol": opts.fatol},
            )
        return minimize(
            self.objective, x0, method="Nelder-Mead",
            options={
                "maxiter": opts.max_iter,
                "maxfev": 2 * opts.max_iter,
                "xatol": opts.xatol,
                "fatol": opts.fatol,
                "adaptive": True,
            },
        )

    def standard_errors(self, x_hat: np.ndarray) -> Optional[Dict[str, float]]:
        hessian = nd.Hessian(self.objective, step=1e-4)(x_hat)
        if not np.all(np.isfinite(hessian)):
            return None
        try:
            np.linalg.cholesky(hessian)
        except np.linalg.LinAlgError:
            return None
        cov_x = np.linalg.inv(hessian)
        jac = self.space.jacobian_diag(x_hat)
        cov = cov_x * np.outer(jac, jac)
        return self.space.labelled(np.sqrt(np.diag(cov)))

    def fit(self, start: Optional[ModelParams] = None) -> EstimationResult:
        best = None
        best_index = 0
        start_values = []
        for index, x0 in enumerate(self.starting_points(start)):
            res = self._minimize(x0)
            start_values.append(-float(res.fun))
            logger.debug(f"start {index}: loglik={-res.fun:.6f}, success={res.success}, nit={res.nit}")
            if best is None or res.fun < best.fun:
                best, best_index = res, index

        theta_hat = self.space.to_params(best.x)
        value = self.loglik_at(theta_hat)

        std_errors = None
        if self.options.std_errors:
            std_errors = self.standard_errors(best.x)
            if std_errors is None:
                logger.warning("Hessian not positive definite at the optimum; standard errors omitted")

        logger.info(
            f"Estimated k={self.k}: d={theta_hat.d:.4f}, loglik={value:.4f}, "
            f"converged={bool(best.success)}, start={best_index}, evaluations={self.n_evaluations}"
        )
        return EstimationResult(
            theta_hat=theta_hat,
            loglik=value,
            std_errors=std_errors,
            converged=bool(best.success),
            iterations=int(best.nit),
            fourier_order=self.k,
            n_evaluations=self.n_evaluations,
            start_index=best_index,
            hessian_ok=std_errors is not None,
            message=str(best.message),
            start_logliks=tuple(start_values),
        )


def estimate(
    series: SeriesPair,
    k: int,
    options: Optional[OptimizerOptions] = None,
    start: Optional[ModelParams] = None,
) -> EstimationResult:
    return HygarchEstimator(series, k, options).fit(start)


def profile_loglik_d(
    series: SeriesPair,
    params: ModelParams,
    d_grid: Sequence[float],
    J: int = settings.TRUNCATION,
    spec: Optional[InterceptSpec] = None,
) -> List[Tuple[float, float]]:
    """Log-likelihood along a grid of d with every other parameter held at `params`."""
    series.validate()
    spec = spec or InterceptSpec.fourier(series.T)
    base = params.model_dump()
    profile = []
    for d in d_grid:
        point = ModelParams(**{**base, "d": float(d)})
        profile.append((float(d), loglik(series, point, spec, J, validate=False)))
    return profile
