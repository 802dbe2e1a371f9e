import functools
import logging
import sys
from pathlib import Path
from typing import Optional

import click
import numpy as np
import pandas as pd
from pydantic import ValidationError

from app.core.config import settings
from app.core.enums import ExitCode, OptimizerMethod, ReportFormat
from app.core.errors import ArhygarchError
from app.core.run_config import RunConfig, echo_config, load_config
from app.repositories.series import coeffs_frame, read_series_csv, write_frame, write_series_csv
from app.services.inference.estimator import estimate, profile_loglik_d
from app.services.lagpoly import LagPolynomial
from app.services.montecarlo import audit_frame, report_tables, run_study
from app.services.simulator import simulate
from app.services.stability import StabilityAnalyzer

logger = logging.getLogger(__name__)


def configure_logging(verbose: int):
    level = settings.LOG_LEVEL
    if verbose == 1:
        level = "INFO"
    elif verbose > 1:
        level = "DEBUG"
    # Configure Logging
    logging.basicConfig(
        level=level,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
        force=True,
    )


def handle_errors(func):
    """Map package errors onto the documented exit codes."""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except ArhygarchError as e:
            logger.debug("command failed", exc_info=True)
            click.echo(f"error: {e.message}", err=True)
            sys.exit(int(e.exit_code))
        except ValidationError as e:
            click.echo(f"error: {e.errors()[0]['msg']}", err=True)
            sys.exit(int(ExitCode.USAGE))
    return wrapper


def _config(path: Optional[str], **overrides) -> RunConfig:
    cfg = load_config(path) if path else RunConfig()
    updates = {k: v for k, v in overrides.items() if v is not None}
    if updates:
        cfg = RunConfig(**{**cfg.model_dump(), **updates})
    return cfg


def _write_echo(out, cfg: RunConfig) -> Path:
    """Effective configuration next to an output file: `sim.csv` gets `sim.echo`."""
    path = Path(out).with_suffix(".echo")
    path.write_text(echo_config(cfg), encoding="utf-8")
    logger.info(f"Effective config written to {path}")
    return path


config_option = click.option(
    "--config", "-c", "config_path", type=click.Path(exists=True, dir_okay=False),
    default=None, help="Flat key = value run configuration file",
)


@click.group()
@click.option("--verbose", "-v", count=True, help="-v for INFO, -vv for DEBUG")
def cli(verbose):
    """Simulate, estimate and stability-check A-Realized HYGARCH models."""
    configure_logging(verbose)


@cli.command()
@config_option
@click.option("--d", "d", type=float, default=None, help="Long-memory parameter")
@click.option("--beta", type=float, default=None)
@click.option("--gamma", type=float, default=None)
@click.option("--delta", type=float, default=None)
@click.option("--trunc", "-J", "J", type=int, default=None, help="Truncation length")
@click.option("--out", "-o", type=click.Path(dir_okay=False), default=None, help="Output CSV (default: stdout)")
@handle_errors
def coeffs(config_path, d, beta, gamma, delta, J, out):
    """Dump the lag weights w_1..w_J as `j,w_j`."""
    cfg = _config(config_path, d=d, beta=beta, gamma=gamma, delta=delta, J=J)
    weights = LagPolynomial.hygarch_weights(cfg.d, cfg.beta, cfg.gamma, cfg.delta, cfg.J)
    frame = coeffs_frame(weights)
    if out:
        write_frame(out, frame)
        _write_echo(out, cfg)
    else:
        click.echo(frame.to_csv(index=False, float_format="%.17g"), nl=False)


@cli.command()
@config_option
@click.option("--d", "d", type=float, default=None)
@click.option("--trunc", "-J", "J", type=int, default=None)
@click.option("--csv", "csv_path", type=click.Path(dir_okay=False), default=None, help="Also write the report as CSV")
@handle_errors
def stability(config_path, d, J, csv_path):
    """Check the sufficient second-moment conditions and print the bound."""
    cfg = _config(config_path, d=d, J=J)
    report = StabilityAnalyzer.stability_check(cfg.model_params(), cfg.J)
    bound = report.moment_bound
    rows = {
        "condition1": report.condition1,
        "condition2": report.condition2,
        "rho_closed_form": report.rho_closed_form,
        "rho_numeric": report.rho_numeric,
        "certified": report.certified,
        "a": report.a,
        "b": report.b,
        "c": report.c,
        "lambda_1": report.eigenvalues[0],
        "lambda_2": report.eigenvalues[1],
        "lambda_3": report.eigenvalues[2],
        "bound_log_h": bound[0] if bound is not None else float("nan"),
        "bound_log_x": bound[1] if bound is not None else float("nan"),
        "J": report.J,
        "truncation_error": report.truncation_error,
    }
    width = max(len(k) for k in rows)
    for key, value in rows.items():
        text = f"{value:.10g}" if isinstance(value, float) else str(value)
        click.echo(f"{key:<{width}}  {text}")
    if csv_path:
        write_frame(csv_path, pd.DataFrame([rows]))
        _write_echo(csv_path, cfg)


@cli.command("simulate")
@config_option
@click.option("--out", "-o", type=click.Path(dir_okay=False), required=True, help="Output CSV t,r,x[,h]")
@click.option("--seed", type=int, default=None)
@click.option("--with-h", is_flag=True, help="Include the true conditional variance h_t")
@handle_errors
def simulate_cmd(config_path, out, seed, with_h):
    """Simulate one path under the configured design."""
    cfg = _config(config_path, seed=seed)
    sim = simulate(cfg.sim_config())
    write_series_csv(out, sim, include_h=with_h)
    _write_echo(out, cfg)
    click.echo(f"wrote {sim.T} observations to {out}")


@cli.command("estimate")
@click.argument("input_csv", type=click.Path(exists=True, dir_okay=False))
@config_option
@click.option("--k", "k", type=int, default=None, help="Fourier order")
@click.option("--trunc", "-J", "J", type=int, default=None, help="Filter truncation length")
@click.option("--seed", type=int, default=None)
@click.option("--starts", type=int, default=None, help="Number of starting points")
@click.option("--method", type=click.Choice([m.value for m in OptimizerMethod]), default=None)
@click.option("--out", "-o", type=click.Path(dir_okay=False), default=None, help="Write the result as a one-row CSV")
@handle_errors
def estimate_cmd(input_csv, config_path, k, J, seed, starts, method, out):
    """Fit the model to a `t,r,x` CSV by quasi-maximum likelihood."""
    cfg = _config(config_path, k=k, J=J, seed=seed, starts=starts, method=method)
    series = read_series_csv(input_csv)
    result = estimate(series, cfg.k, cfg.optimizer_options())

    row = result.as_row()
    names = [n for n in row if not n.startswith("se_") and n not in ("k", "loglik", "converged", "iterations", "start_index", "hessian_ok")]
    click.echo(f"A-Realized HYGARCH(1,d,1,{cfg.k})  T={series.T}  J={cfg.J}")
    for name in names:
        click.echo(f"  {name:<10} {row[name]:>14.6f}  ({row['se_' + name]:.6f})")
    click.echo(f"  loglik     {result.loglik:>14.6f}")
    click.echo(f"  converged  {result.converged}  iterations={result.iterations}  start={result.start_index}")
    if not result.hessian_ok:
        click.echo("  standard errors unavailable (Hessian not positive definite)")

    frame = pd.DataFrame([row])
    if out:
        write_frame(out, frame)
        _write_echo(out, cfg)
    else:
        click.echo(frame.to_csv(index=False, float_format="%.17g"), nl=False)


@cli.command()
@config_option
@click.option("--out", "-o", "out_dir", type=click.Path(file_okay=False), required=True, help="Output directory")
@click.option("--full", is_flag=True, help="Full scale: R=500, T=3000, J=3000")
@click.option("--seed", type=int, default=None)
@click.option("--workers", type=int, default=None)
@click.option("--format", "fmt", type=click.Choice([f.value for f in ReportFormat]), default=ReportFormat.TEXT.value)
@click.option("--reference", is_flag=True, help="Append the published bias/RMSE/SE for each cell")
@click.option("--progress/--no-progress", default=False)
@handle_errors
def montecarlo(config_path, out_dir, full, seed, workers, fmt, reference, progress):
    """Monte Carlo bias/RMSE/SE study of d_hat."""
    cfg = _config(config_path, seed=seed, n_workers=workers)
    if full:
        logger.warning("full-scale study requested (R=500, T=3000, J=3000); expect many hours of CPU time")
        click.echo("warning: full-scale study, this will take a long time", err=True)
    study = cfg.study_config(full=full)

    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    (out / "config.echo").write_text(echo_config(cfg), encoding="utf-8")

    report = run_study(study, progress=progress)
    (out / "report.csv").write_text(report_tables(report, ReportFormat.CSV, reference), encoding="utf-8")
    write_frame(out / "audit.csv", audit_frame(report))
    click.echo(report_tables(report, ReportFormat(fmt), reference), nl=False)


@cli.command()
@click.argument("input_csv", type=click.Path(exists=True, dir_okay=False))
@config_option
@click.option("--d-min", type=float, default=0.05)
@click.option("--d-max", type=float, default=0.95)
@click.option("--points", type=int, default=19)
@click.option("--trunc", "-J", "J", type=int, default=None)
@click.option("--out", "-o", type=click.Path(dir_okay=False), default=None, help="Output CSV d,loglik (default: stdout)")
@handle_errors
def profile(input_csv, config_path, d_min, d_max, points, J, out):
    """Log-likelihood profile over d with the other parameters held at the config values."""
    cfg = _config(config_path, J=J)
    series = read_series_csv(input_csv)
    grid = np.linspace(d_min, d_max, points)
    frame = pd.DataFrame(profile_loglik_d(series, cfg.model_params(), grid, cfg.J), columns=["d", "loglik"])
    if out:
        write_frame(out, frame)
        _write_echo(out, cfg)
    else:
        click.echo(frame.to_csv(index=False, float_format="%.17g"), nl=False)


if __name__ == "__main__":
    cli()
