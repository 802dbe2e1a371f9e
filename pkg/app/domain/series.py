from dataclasses import dataclass
import numpy as np

from app.core.errors import DataError

@dataclass(frozen=True)
class SeriesPair:
    """Aligned observed returns r_t and realized measures x_t, t = 1..T."""
    r: np.ndarray
    x: np.ndarray

    def __post_init__(self):
        r = np.asarray(self.r, dtype=float)
        x = np.asarray(self.x, dtype=float)
        if r.ndim != 1 or x.ndim != 1 or r.shape != x.shape:
            raise DataError(f"returns and realized measures must be aligned 1-d series (got {r.shape} and {x.shape})")
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "x", x)

    @property
    def T(self) -> int:
        return int(self.r.shape[0])

    def validate(self) -> "SeriesPair":
        """Reject non-finite values and non-positive realized measures, citing the 1-based row."""
        bad_r = np.flatnonzero(~np.isfinite(self.r))
        if bad_r.size:
            raise DataError("non-finite return", row=int(bad_r[0]) + 1, column="r")
        bad_x = np.flatnonzero(~np.isfinite(self.x) | (self.x <= 0.0))
        if bad_x.size:
            row = int(bad_x[0])
            raise DataError(f"realized measure must be finite and > 0 (got {self.x[row]!r})", row=row + 1, column="x")
        return self
