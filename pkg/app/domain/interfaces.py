from abc import ABC, abstractmethod
import numpy as np

from app.domain.schemas import InterceptSpec

class AbstractIntercept(ABC):
    """Deterministic intercept schedule omega_t, t = 1..T."""
    variant: str = ""

    def __init__(self, spec: InterceptSpec):
        self.spec = spec

    @abstractmethod
    def values(self, omega0: float) -> np.ndarray:
        """Return omega_1..omega_T as an array of length T."""
        pass

    def at(self, t: int, omega0: float) -> float:
        if not 1 <= t <= self.spec.T:
            raise IndexError(f"time index {t} outside 1..{self.spec.T}")
        return float(self.values(omega0)[t - 1])
