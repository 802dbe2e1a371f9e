"""
CSV persistence: observed series (t,r,x[,h]), coefficient tables (j,w_j) and
Monte Carlo output frames. Floats are written with 17 significant digits and
read back with pandas' round-trip parser, so values survive bit-exactly.
"""

from pathlib import Path
from typing import Union
import logging

import numpy as np
import pandas as pd

from app.core.errors import DataError
from app.domain.series import SeriesPair
from app.services.lagpoly import LagWeights
from app.services.simulator import SimulatedSeries

logger = logging.getLogger(__name__)

FLOAT_FORMAT = "%.17g"
SERIES_COLUMNS = ("t", "r", "x")

PathLike = Union[str, Path]


def read_series_csv(path: PathLike) -> SeriesPair:
    """Load `t,r,x` (extra columns ignored). Row numbers in errors count data rows from 1."""
    try:
        frame = pd.read_csv(path, float_precision="round_trip", skipinitialspace=True)
    except FileNotFoundError:
        raise DataError(f"series file not found: {path}")
    except (pd.errors.ParserError, pd.errors.EmptyDataError, UnicodeDecodeError, OSError) as e:
        raise DataError(f"cannot read series file {path}: {e}")

    for column in SERIES_COLUMNS:
        if column not in frame.columns:
            raise DataError(f"missing required column (header has {list(frame.columns)})", column=column)
    if frame.empty:
        raise DataError(f"series file {path} has no data rows")

    numeric = {}
    for column in SERIES_COLUMNS:
        values = pd.to_numeric(frame[column], errors="coerce")
        bad = np.flatnonzero(values.isna().to_numpy() & frame[column].notna().to_numpy())
        if bad.size:
            row = int(bad[0])
            raise DataError(f"not a number: {frame[column].iloc[row]!r}", row=row + 1, column=column)
        numeric[column] = values.to_numpy(dtype=float)

    t = numeric["t"]
    bad_t = np.flatnonzero(~np.isfinite(t) | (t != np.round(t)))
    if bad_t.size:
        raise DataError("t must be an integer", row=int(bad_t[0]) + 1, column="t")
    steps = np.flatnonzero(np.diff(t) <= 0)
    if steps.size:
        raise DataError("t must be strictly increasing", row=int(steps[0]) + 2, column="t")

    series = SeriesPair(r=numeric["r"], x=numeric["x"]).validate()
    logger.info(f"Read {series.T} observations from {path}")
    return series


def series_frame(series: Union[SeriesPair, SimulatedSeries], include_h: bool = False) -> pd.DataFrame:
    frame = pd.DataFrame({"t": np.arange(1, series.T + 1), "r": series.r, "x": series.x})
    if include_h:
        if not isinstance(series, SimulatedSeries):
            raise DataError("h is only available for simulated series")
        frame["h"] = series.h
    return frame


def write_series_csv(path: PathLike, series: Union[SeriesPair, SimulatedSeries], include_h: bool = False) -> Path:
    path = Path(path)
    series_frame(series, include_h).to_csv(path, index=False, float_format=FLOAT_FORMAT)
    logger.info(f"Wrote {series.T} observations to {path}")
    return path


def coeffs_frame(weights: LagWeights) -> pd.DataFrame:
    return pd.DataFrame({"j": np.arange(1, weights.J + 1), "w_j": weights.w})


def write_frame(path: PathLike, frame: pd.DataFrame) -> Path:
    path = Path(path)
    frame.to_csv(path, index=False, float_format=FLOAT_FORMAT)
    logger.debug(f"Wrote {len(frame)} rows to {path}")
    return path
