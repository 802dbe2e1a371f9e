"""
Lag polynomial expansions.

Truncated coefficient sequences for the fractional differencing operator
(1-L)^d and for the HYGARCH filter delta * [1 - (1-gamma L)(1-beta L)^-1 (1-L)^d],
shared by the simulator and the volatility filter.

Coefficients come from multiplicative recurrences; Gamma-function ratios
overflow past j ~ 170.
"""

from dataclasses import dataclass
import logging

import numpy as np
from scipy.signal import lfilter

from app.core.config import settings
from app.core.errors import DomainError

logger = logging.getLogger(__name__)


def _frozen(arr: np.ndarray) -> np.ndarray:
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class FracDiffCoeffs:
    """Signed coefficients phi[0..J] of (1-L)^d, phi[0] = 1."""
    d: float
    J: int
    phi: np.ndarray


@dataclass(frozen=True)
class LagWeights:
    """
    Filter weights of the GARCH equation.

    `w[j-1]` is the weight of log x_{t-j} for j = 1..J, and
    `c[0..J]` the expansion of (1-gamma L)(1-beta L)^-1 (1-L)^d with c[0] = 1,
    so that w_j = -delta * c_j.
    """
    d: float
    beta: float
    gamma: float
    delta: float
    J: int
    w: np.ndarray
    c: np.ndarray

    def lag(self, j: int) -> float:
        if not 1 <= j <= self.J:
            raise IndexError(f"lag {j} outside 1..{self.J}")
        return float(self.w[j - 1])


class LagPolynomial:
    @staticmethod
    def fracdiff_coeffs(d: float, J: int) -> FracDiffCoeffs:
        """
        phi[j] = phi[j-1] * (j-1-d) / j, phi[0] = 1.
        """
        if not 0.0 <= d <= 1.0:
            raise DomainError(f"fractional order d must lie in [0, 1], got {d}")
        if J < 0:
            raise DomainError(f"truncation J must be >= 0, got {J}")

        j = np.arange(1, J + 1, dtype=float)
        phi = np.empty(J + 1)
        phi[0] = 1.0
        phi[1:] = np.cumprod((j - 1.0 - d) / j)
        return FracDiffCoeffs(d=float(d), J=int(J), phi=_frozen(phi))

    @staticmethod
    def hygarch_weights(
        d: float,
        beta: float,
        gamma: float,
        delta: float,
        J: int = settings.DGP_TRUNCATION,
    ) -> LagWeights:
        """
        Weights of log h_t = omega_t + sum_j w_j log x_{t-j}.

        g = (1 - gamma L)(1-L)^d is formed term by term, then divided by
        (1 - beta L) through the recursion c_j = g_j + beta c_{j-1}.
        """
        if not 0.0 <= d < 1.0:
            raise DomainError(f"fractional order d must lie in [0, 1), got {d}")
        if abs(beta) >= 1.0:
            raise DomainError(f"|beta| must be < 1 for (1 - beta L) to be invertible, got beta={beta}")
        if J < 1:
            raise DomainError(f"truncation J must be >= 1, got {J}")

        phi = LagPolynomial.fracdiff_coeffs(d, J).phi
        g = phi.copy()
        g[1:] -= gamma * phi[:-1]
        c = lfilter([1.0], [1.0, -beta], g)
        w = -delta * c[1:]
        logger.debug(f"HYGARCH weights d={d}, beta={beta}, gamma={gamma}, delta={delta}, J={J}: w_1={w[0]:.6g}")
        return LagWeights(
            d=float(d), beta=float(beta), gamma=float(gamma), delta=float(delta),
            J=int(J), w=_frozen(w), c=_frozen(c),
        )

    @staticmethod
    def weight_tail_mass(weights: LagWeights) -> float:
        """Sum of |w_j| over the retained lags; used to report truncation effects."""
        return float(np.sum(np.abs(weights.w)))


fracdiff_coeffs = LagPolynomial.fracdiff_coeffs
hygarch_weights = LagPolynomial.hygarch_weights
weight_tail_mass = LagPolynomial.weight_tail_mass
