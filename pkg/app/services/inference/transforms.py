"""
Unconstrained reparameterization of the parameter vector for the optimizer.

    gamma, beta   in (0, 0.999)   scaled logit
    d             in (0.01, 0.99) scaled logit
    delta         in (0.05, 5)    scaled logit
    nu            = 2.1 + exp(x)
    sigma_u2      = 1e-8 + exp(x)
    omega0, xi, phi_meas, tau1, tau2, a_j, b_j   identity
"""

from dataclasses import dataclass
from typing import Dict, List, Tuple

import numpy as np
from scipy.special import expit, logit

from app.domain.schemas import ModelParams

CORE_NAMES: Tuple[str, ...] = (
    "omega0", "gamma", "beta", "d", "delta", "nu", "xi", "phi_meas", "tau1", "tau2", "sigma_u2",
)

# Open intervals for logit-mapped parameters
INTERVALS: Dict[str, Tuple[float, float]] = {
    "gamma": (0.0, 0.999),
    "beta": (0.0, 0.999),
    "d": (0.01, 0.99),
    "delta": (0.05, 5.0),
}
# Lower bounds for exp-mapped parameters
FLOORS: Dict[str, float] = {
    "nu": 2.1,
    "sigma_u2": 1e-8,
}
_EXP_CAP = 700.0


@dataclass(frozen=True)
class ParameterSpace:
    k: int

    @property
    def names(self) -> List[str]:
        return list(CORE_NAMES) + [f"a_{j}" for j in range(1, self.k + 1)] + [f"b_{j}" for j in range(1, self.k + 1)]

    @property
    def dim(self) -> int:
        return len(CORE_NAMES) + 2 * self.k

    def natural_vector(self, params: ModelParams) -> np.ndarray:
        if params.k != self.k:
            params = params.with_order(self.k)
        core = [getattr(params, name) for name in CORE_NAMES]
        return np.array(core + list(params.fourier_a) + list(params.fourier_b), dtype=float)

    def to_params(self, x: np.ndarray) -> ModelParams:
        values = {}
        for i, name in enumerate(CORE_NAMES):
            xi = float(x[i])
            if name in INTERVALS:
                lo, hi = INTERVALS[name]
                values[name] = lo + (hi - lo) * float(expit(xi))
            elif name in FLOORS:
                values[name] = FLOORS[name] + float(np.exp(min(xi, _EXP_CAP)))
            else:
                values[name] = xi
        n = len(CORE_NAMES)
        values["fourier_a"] = tuple(float(v) for v in x[n:n + self.k])
        values["fourier_b"] = tuple(float(v) for v in x[n + self.k:n + 2 * self.k])
        return ModelParams(**values)

    def to_unconstrained(self, params: ModelParams, margin: float = 1e-6) -> np.ndarray:
        """Inverse map; values on or beyond a bound are pulled `margin` (relative) inside."""
        natural = self.natural_vector(params)
        x = natural.copy()
        for i, name in enumerate(CORE_NAMES):
            if name in INTERVALS:
                lo, hi = INTERVALS[name]
                s = np.clip((natural[i] - lo) / (hi - lo), margin, 1.0 - margin)
                x[i] = float(logit(s))
            elif name in FLOORS:
                x[i] = float(np.log(max(natural[i] - FLOORS[name], margin)))
        return x

    def jacobian_diag(self, x: np.ndarray) -> np.ndarray:
        """d natural / d unconstrained, elementwise (the map is coordinate-wise)."""
        jac = np.ones(self.dim)
        for i, name in enumerate(CORE_NAMES):
            if name in INTERVALS:
                lo, hi = INTERVALS[name]
                s = float(expit(x[i]))
                jac[i] = (hi - lo) * s * (1.0 - s)
            elif name in FLOORS:
                jac[i] = float(np.exp(min(x[i], _EXP_CAP)))
        return jac

    def labelled(self, values: np.ndarray) -> Dict[str, float]:
        return {name: float(v) for name, v in zip(self.names, values)}

    def natural_dict(self, params: ModelParams) -> Dict[str, float]:
        return self.labelled(self.natural_vector(params))


def parameter_names(k: int) -> List[str]:
    return ParameterSpace(k).names
