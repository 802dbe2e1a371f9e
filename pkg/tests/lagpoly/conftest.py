"""
Shared fixtures for the lag-polynomial tests.

The oracles here share no code with app.services.lagpoly: coefficients of
(1-L)^d come from Gamma-function ratios, and the HYGARCH filter is built by
explicit polynomial multiplication followed by multiplication with the
geometric series of (1 - beta L)^-1.
"""

import numpy as np
import pytest
from scipy.special import gammaln


def gamma_ratio_phi(d: float, J: int) -> np.ndarray:
    """phi_j = -d Gamma(j-d) / (Gamma(1-d) Gamma(j+1)) for 0 < d < 1."""
    phi = np.empty(J + 1)
    phi[0] = 1.0
    j = np.arange(1, J + 1, dtype=float)
    phi[1:] = -d * np.exp(gammaln(j - d) - gammaln(1.0 - d) - gammaln(j + 1.0))
    return phi


def brute_force_c(d: float, beta: float, gamma: float, J: int) -> np.ndarray:
    phi = np.ones(J + 1)
    for j in range(1, J + 1):
        phi[j] = phi[j - 1] * (j - 1 - d) / j
    numerator = np.polynomial.polynomial.polymul([1.0, -gamma], phi)[: J + 1]
    geometric = beta ** np.arange(J + 1)
    return np.polynomial.polynomial.polymul(numerator, geometric)[: J + 1]


# ──────────────────────────────────────────────────────────────────────────────
# Oracles and the baseline parameter set
# ──────────────────────────────────────────────────────────────────────────────

@pytest.fixture
def phi_oracle():
    return gamma_ratio_phi


@pytest.fixture
def c_oracle():
    return brute_force_c


@pytest.fixture
def baseline_filter():
    """beta, gamma, delta of the simulation study."""
    return {"beta": 0.4, "gamma": 0.1, "delta": 0.9}
