"""
Monte Carlo study of the estimated long-memory parameter d.

Each replication simulates one series under (design, d), fits every Fourier
order k in the grid to it, and records d_hat. Replication r always draws from
stream r of the base seed, so a study is reproducible regardless of the
number of workers. Failures are logged and recorded, never raised.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from io import StringIO
from typing import Dict, List, Optional, Tuple
import logging

import numpy as np
import pandas as pd
from tqdm import tqdm

from app.core.enums import Design, ReportFormat
from app.core.errors import DataError, DomainError
from app.domain.schemas import ModelParams, OptimizerOptions, StudyConfig
from app.services.inference.estimator import estimate
from app.services.reference import published
from app.services.simulator import simulate_design

logger = logging.getLogger(__name__)

REPORT_COLUMNS = ["design", "d", "k", "bias", "rmse", "se", "n", "n_converged"]
REFERENCE_COLUMNS = ["ref_bias", "ref_rmse", "ref_se"]
DESIGN_ORDER = {design: i for i, design in enumerate(Design)}


@dataclass(frozen=True)
class ReplicationTask:
    design: Design
    d: float
    k_values: Tuple[int, ...]
    rep: int
    T: int
    burn_in: int
    truncation: int
    base_seed: int
    optimizer: OptimizerOptions


@dataclass(frozen=True)
class ReplicationRecord:
    design: Design
    d: float
    k: int
    rep: int
    d_hat: float
    converged: bool
    loglik: float
    theta: Dict[str, float] = field(default_factory=dict)
    error: Optional[str] = None

    @property
    def failed(self) -> bool:
        return self.error is not None


@dataclass(frozen=True)
class CellResult:
    design: Design
    d: float
    k: int
    bias: float
    rmse: float
    se: float
    n: int
    n_converged: int
    d_hats: Tuple[float, ...] = field(default=(), repr=False)


@dataclass
class MonteCarloReport:
    config: StudyConfig
    cells: List[CellResult]
    records: List[ReplicationRecord]

    @property
    def n_failed(self) -> int:
        return sum(1 for rec in self.records if rec.failed)

    def cell(self, design: Design, d: float, k: int) -> CellResult:
        for cell in self.cells:
            if cell.design == design and cell.k == k and abs(cell.d - d) < 1e-12:
                return cell
        raise KeyError((design, d, k))


def run_replication(task: ReplicationTask) -> List[ReplicationRecord]:
    """Simulate one series and fit each order in the grid. Module level so it pickles."""
    records = []
    try:
        sim = simulate_design(
            ModelParams.baseline(task.d),
            task.design,
            task.T,
            burn_in=task.burn_in,
            truncation=task.truncation,
            seed=task.base_seed,
            stream_id=task.rep,
        )
        series = sim.to_series_pair()
    except Exception as e:
        logger.warning(f"replication {task.rep} ({task.design.value}, d={task.d}) failed to simulate: {e}", exc_info=True)
        return [_failed(task, k, e) for k in task.k_values]

    for k in task.k_values:
        try:
            result = estimate(series, k, task.optimizer)
            records.append(
                ReplicationRecord(
                    design=task.design, d=task.d, k=k, rep=task.rep,
                    d_hat=result.theta_hat.d,
                    converged=result.converged,
                    loglik=result.loglik,
                    theta=result.theta_hat.model_dump(),
                )
            )
        except Exception as e:
            logger.warning(f"replication {task.rep} ({task.design.value}, d={task.d}, k={k}) failed to estimate: {e}", exc_info=True)
            records.append(_failed(task, k, e))
    return records


def _failed(task: ReplicationTask, k: int, exc: Exception) -> ReplicationRecord:
    return ReplicationRecord(
        design=task.design, d=task.d, k=k, rep=task.rep,
        d_hat=float("nan"), converged=False, loglik=float("nan"),
        error=f"{type(exc).__name__}: {exc}",
    )


def build_tasks(cfg: StudyConfig) -> List[ReplicationTask]:
    options = cfg.optimizer.model_copy(update={"truncation": cfg.truncation})
    k_values = tuple(sorted(set(cfg.k_values)))
    return [
        ReplicationTask(
            design=design, d=float(d), k_values=k_values, rep=rep,
            T=cfg.T, burn_in=cfg.burn_in, truncation=cfg.truncation,
            base_seed=cfg.base_seed, optimizer=options,
        )
        for design in sorted(set(cfg.designs), key=DESIGN_ORDER.get)
        for d in sorted(set(cfg.d_values))
        for rep in range(cfg.replications)
    ]


def summarize(d: float, d_hats: np.ndarray) -> Tuple[float, float, float]:
    """Bias, RMSE and population standard deviation; rmse^2 = bias^2 + se^2."""
    errors = d_hats - d
    bias = float(np.mean(errors))
    rmse = float(np.sqrt(np.mean(errors ** 2)))
    se = float(np.std(d_hats, ddof=0))
    return bias, rmse, se


def aggregate(cfg: StudyConfig, records: List[ReplicationRecord]) -> List[CellResult]:
    groups: Dict[Tuple[Design, float, int], List[ReplicationRecord]] = {}
    for rec in records:
        groups.setdefault((rec.design, rec.d, rec.k), []).append(rec)

    cells = []
    for (design, d, k), recs in sorted(groups.items(), key=lambda item: (DESIGN_ORDER[item[0][0]], item[0][1], item[0][2])):
        recs = sorted(recs, key=lambda rec: rec.rep)
        usable = [rec for rec in recs if not rec.failed and (cfg.include_nonconverged or rec.converged)]
        n_converged = sum(1 for rec in recs if rec.converged)
        if not usable:
            logger.warning(f"no usable replications for {design.value}, d={d}, k={k}")
            cells.append(CellResult(design, d, k, float("nan"), float("nan"), float("nan"), 0, n_converged))
            continue
        d_hats = np.array([rec.d_hat for rec in usable])
        bias, rmse, se = summarize(d, d_hats)
        cells.append(CellResult(design, d, k, bias, rmse, se, len(usable), n_converged, tuple(d_hats.tolist())))
    return cells


def run_study(cfg: StudyConfig, progress: bool = False) -> MonteCarloReport:
    tasks = build_tasks(cfg)
    logger.info(
        f"Monte Carlo study: {len(tasks)} replications x {len(set(cfg.k_values))} orders, "
        f"T={cfg.T}, J={cfg.truncation}, workers={cfg.n_workers}"
    )

    if cfg.n_workers == 1:
        results = [run_replication(task) for task in tqdm(tasks, disable=not progress, desc="replications")]
    else:
        # executor.map yields in submission order
        with ProcessPoolExecutor(max_workers=cfg.n_workers) as executor:
            results = list(
                tqdm(executor.map(run_replication, tasks), total=len(tasks), disable=not progress, desc="replications")
            )

    records = [rec for batch in results for rec in batch]
    report = MonteCarloReport(config=cfg, cells=aggregate(cfg, records), records=records)
    if report.n_failed:
        logger.warning(f"{report.n_failed} of {len(records)} fits failed and were excluded")
    return report


# ----------------------------------------------------------------------
# Reporting
# ----------------------------------------------------------------------


def report_frame(report: MonteCarloReport, reference: bool = False) -> pd.DataFrame:
    if not report.cells:
        raise DomainError("Monte Carlo report has no cells")
    rows = []
    for cell in report.cells:
        row = {
            "design": cell.design.value, "d": cell.d, "k": cell.k,
            "bias": cell.bias, "rmse": cell.rmse, "se": cell.se,
            "n": cell.n, "n_converged": cell.n_converged,
        }
        if reference:
            ref = published(cell.design, cell.d, cell.k)
            row.update(zip(REFERENCE_COLUMNS, ref if ref else (float("nan"),) * 3))
        rows.append(row)
    columns = REPORT_COLUMNS + (REFERENCE_COLUMNS if reference else [])
    return pd.DataFrame(rows, columns=columns)


def _markdown(frame: pd.DataFrame) -> str:
    def fmt(value) -> str:
        if isinstance(value, float):
            return "" if np.isnan(value) else f"{value:.4f}"
        return str(value)

    lines = [
        "| " + " | ".join(frame.columns) + " |",
        "|" + "|".join("---" for _ in frame.columns) + "|",
    ]
    for row in frame.itertuples(index=False):
        lines.append("| " + " | ".join(fmt(v) for v in row) + " |")
    return "\n".join(lines) + "\n"


def report_tables(report: MonteCarloReport, fmt: ReportFormat = ReportFormat.TEXT, reference: bool = False) -> str:
    frame = report_frame(report, reference)
    fmt = ReportFormat(fmt)
    if fmt == ReportFormat.CSV:
        return frame.to_csv(index=False, float_format="%.17g")
    if fmt == ReportFormat.MARKDOWN:
        return _markdown(frame)

    blocks = []
    for (design, k), table in frame.groupby(["design", "k"], sort=False):
        blocks.append(f"design={design} k={k}\n" + table.drop(columns=["design", "k"]).to_string(index=False, float_format=lambda v: f"{v:.4f}"))
    return "\n\n".join(blocks) + "\n"


def parse_report_csv(text: str) -> List[CellResult]:
    """Read back a CSV written by `report_tables`."""
    frame = pd.read_csv(StringIO(text), float_precision="round_trip")
    missing = [c for c in REPORT_COLUMNS if c not in frame.columns]
    if missing:
        raise DataError(f"report CSV lacks columns {missing}")
    cells = []
    for row in frame.itertuples(index=False):
        cells.append(
            CellResult(
                design=Design(row.design), d=float(row.d), k=int(row.k),
                bias=float(row.bias), rmse=float(row.rmse), se=float(row.se),
                n=int(row.n), n_converged=int(row.n_converged),
            )
        )
    return cells


def audit_frame(report: MonteCarloReport) -> pd.DataFrame:
    """One row per (replication, order) with the full estimated vector."""
    rows = []
    for rec in sorted(report.records, key=lambda r: (DESIGN_ORDER[r.design], r.d, r.k, r.rep)):
        row = {k: v for k, v in asdict(rec).items() if k not in ("theta",)}
        row["design"] = rec.design.value
        for name, value in rec.theta.items():
            if isinstance(value, tuple):
                prefix = "a" if name == "fourier_a" else "b"
                for j, v in enumerate(value, start=1):
                    row[f"{prefix}_{j}"] = v
            else:
                row[name] = value
        rows.append(row)
    frame = pd.DataFrame(rows)
    leading = ["design", "d", "k", "rep", "d_hat", "converged", "loglik"]
    return frame[leading + [c for c in frame.columns if c not in leading]]
