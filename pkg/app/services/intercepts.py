from typing import Dict, Sequence, Tuple, Type
import logging

import numpy as np

from app.core.enums import Design, InterceptVariant
from app.core.errors import DomainError
from app.domain.interfaces import AbstractIntercept
from app.domain.schemas import InterceptSpec

logger = logging.getLogger(__name__)

# Levels of the three simulation designs
DESIGN_LEVELS: Dict[Design, Tuple[float, ...]] = {
    Design.M1: (0.1,),
    Design.M2: (0.1, 0.5),
    Design.M3: (0.1, 0.5, 0.3),
}


class FourierIntercept(AbstractIntercept):
    """omega_t = omega0 + sum_j [a_j sin(2 pi j t / T) + b_j cos(2 pi j t / T)]"""
    variant = InterceptVariant.FOURIER.value

    def values(self, omega0: float) -> np.ndarray:
        T = self.spec.T
        out = np.full(T, float(omega0))
        if not self.spec.k:
            return out
        t = np.arange(1, T + 1, dtype=float)
        for j, (a_j, b_j) in enumerate(zip(self.spec.a, self.spec.b), start=1):
            angle = 2.0 * np.pi * j * t / T
            out += a_j * np.sin(angle) + b_j * np.cos(angle)
        return out


class StepIntercept(AbstractIntercept):
    """Piecewise-constant levels switching at the InterceptSpec break points; omega0 is not used."""
    variant = "step"

    def values(self, omega0: float) -> np.ndarray:
        T = self.spec.T
        out = np.empty(T)
        starts = (1,) + self.spec.break_points
        ends = self.spec.break_points + (T + 1,)
        for level, start, end in zip(self.spec.levels, starts, ends):
            out[start - 1:end - 1] = level
        return out


class InterceptFactory:
    _registry: Dict[InterceptVariant, Type[AbstractIntercept]] = {}

    @classmethod
    def register(cls, variant: InterceptVariant, intercept_cls: Type[AbstractIntercept]):
        cls._registry[variant] = intercept_cls

    @classmethod
    def get_intercept(cls, spec: InterceptSpec) -> AbstractIntercept:
        intercept_cls = cls._registry.get(spec.variant)
        if intercept_cls is None:
            raise DomainError(f"no intercept schedule registered for '{spec.variant.value}'")
        return intercept_cls(spec)

    @classmethod
    def get_registered_variants(cls):
        return list(cls._registry.keys())


InterceptFactory.register(InterceptVariant.FOURIER, FourierIntercept)
InterceptFactory.register(InterceptVariant.STEP_M1, StepIntercept)
InterceptFactory.register(InterceptVariant.STEP_M2, StepIntercept)
InterceptFactory.register(InterceptVariant.STEP_M3, StepIntercept)


def intercept_values(spec: InterceptSpec, omega0: float) -> np.ndarray:
    return InterceptFactory.get_intercept(spec).values(omega0)


def intercept_at(spec: InterceptSpec, t: int, omega0: float) -> float:
    return InterceptFactory.get_intercept(spec).at(t, omega0)


def intercept_bounds(omega0: float, a: Sequence[float] = (), b: Sequence[float] = ()) -> Tuple[float, float, bool]:
    """
    Bounds on the Fourier intercept.

    When sum_j (|a_j| + |b_j|) <= min(1, omega0) the intercept stays in
    [0, c0] with c0 = omega0 + 2. Otherwise the bound is not certified and the
    crude envelope omega0 -/+ sum_j (|a_j| + |b_j|) is returned.
    """
    amplitude = float(np.sum(np.abs(a)) + np.sum(np.abs(b)))
    certified = amplitude <= min(1.0, omega0)
    if certified:
        return 0.0, omega0 + 2.0, True
    logger.info(f"Intercept bound not certified: harmonic amplitude {amplitude:.4g} > min(1, omega0={omega0})")
    return omega0 - amplitude, omega0 + amplitude, False


def make_design(design: Design, T: int) -> InterceptSpec:
    """Intercept of simulation design m1 (constant), m2 (one break) or m3 (two breaks)."""
    if T < 3:
        raise DomainError(f"designs need T >= 3, got T={T}")
    levels = DESIGN_LEVELS[Design(design)]
    if len(levels) == 1:
        return InterceptSpec.step_m1(T, *levels)
    if len(levels) == 2:
        return InterceptSpec.step_m2(T, *levels)
    return InterceptSpec.step_m3(T, *levels)


def standard_intercept(omega0: float, beta: float) -> float:
    """Constant intercept omega0 / (1 - beta) that reduces the adaptive model to the plain Realized HYGARCH."""
    if abs(beta) >= 1.0:
        raise DomainError(f"|beta| must be < 1, got beta={beta}")
    return omega0 / (1.0 - beta)
