"""
Flat `key = value` run configuration.

    # simulate at desk scale
    d = 0.45
    beta = 0.4
    T = 1000
    design = m2

One binding per line, `#` comments, values may be quoted. Lists (d_values,
k_values, designs, fourier_a, fourier_b) are comma separated. Unknown keys
are errors. Parsing uses python-dotenv's statement parser, so the syntax is
the one `.env` files use.
"""

from io import StringIO
from typing import Dict, Optional, Tuple
import logging

from dotenv.parser import parse_stream
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from app.core.config import settings
from app.core.enums import Design, OptimizerMethod
from app.core.errors import ConfigError
from app.domain.schemas import InterceptSpec, ModelParams, OptimizerOptions, SimConfig, StudyConfig
from app.services.intercepts import make_design

logger = logging.getLogger(__name__)

# Legal intervals quoted in range errors
RANGES: Dict[str, str] = {
    "gamma": "(0, 0.999)",
    "beta": "(0, 0.999)",
    "d": "[0, 1)",
    "delta": "(0, inf)",
    "nu": "(2, inf)",
    "sigma_u2": "[0, inf)",
    "T": "[3, inf)",
    "m": "[0, inf)",
    "J": "[1, inf)",
    "k": "[0, inf)",
    "seed": "[0, 2^64)",
    "stream_id": "[0, 2^64)",
    "replications": "[1, inf)",
    "n_workers": "[1, inf)",
    "starts": "[1, inf)",
    "max_iter": "[1, inf)",
}

LIST_KEYS = ("fourier_a", "fourier_b", "d_values", "k_values", "designs")


class RunConfig(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    # model parameters
    omega0: float = 0.1
    gamma: float = Field(0.1, gt=0.0, lt=0.999)
    beta: float = Field(0.4, gt=0.0, lt=0.999)
    d: float = Field(0.35, ge=0.0, lt=1.0)
    delta: float = Field(0.9, gt=0.0)
    nu: float = Field(3.0, gt=2.0)
    xi: float = 0.0
    phi_meas: float = 1.0
    tau1: float = -0.08
    tau2: float = 0.06
    sigma_u2: float = Field(0.4, ge=0.0)
    fourier_a: Tuple[float, ...] = ()
    fourier_b: Tuple[float, ...] = ()

    # simulation / estimation
    T: int = Field(settings.SAMPLE_SIZE, ge=3)
    m: int = Field(settings.BURN_IN, ge=0)
    J: int = Field(settings.TRUNCATION, ge=1)
    design: Optional[Design] = None
    k: int = Field(0, ge=0)
    seed: int = Field(settings.SEED, ge=0, lt=2 ** 64)
    stream_id: int = Field(0, ge=0, lt=2 ** 64)

    # optimizer
    method: OptimizerMethod = OptimizerMethod.NELDER_MEAD
    starts: int = Field(settings.N_STARTS, ge=1)
    max_iter: int = Field(settings.MAX_ITER, ge=1)

    # Monte Carlo study
    d_values: Tuple[float, ...] = (0.25, 0.35, 0.45)
    k_values: Tuple[int, ...] = (0,)
    designs: Tuple[Design, ...] = (Design.M1,)
    replications: int = Field(settings.REPLICATIONS, ge=1)
    n_workers: int = Field(settings.N_WORKERS, ge=1)
    include_nonconverged: bool = True

    @field_validator(*LIST_KEYS, mode="before")
    @classmethod
    def _split_list(cls, value):
        if isinstance(value, str):
            return tuple(item.strip() for item in value.split(",") if item.strip())
        return value

    # ------------------------------------------------------------------
    # Conversions
    # ------------------------------------------------------------------

    def model_params(self) -> ModelParams:
        return ModelParams(
            omega0=self.omega0, gamma=self.gamma, beta=self.beta, d=self.d, delta=self.delta,
            nu=self.nu, xi=self.xi, phi_meas=self.phi_meas, tau1=self.tau1, tau2=self.tau2,
            sigma_u2=self.sigma_u2, fourier_a=self.fourier_a, fourier_b=self.fourier_b,
        )

    def sim_config(self) -> SimConfig:
        if self.design is None:
            intercept = InterceptSpec.fourier(self.T, self.fourier_a, self.fourier_b)
        else:
            intercept = make_design(self.design, self.T)
        return SimConfig(
            params=self.model_params(), intercept=intercept, T=self.T,
            burn_in=self.m, truncation=self.J, seed=self.seed, stream_id=self.stream_id,
        )

    def optimizer_options(self, std_errors: bool = True) -> OptimizerOptions:
        return OptimizerOptions(
            method=self.method, n_starts=self.starts, max_iter=self.max_iter,
            truncation=self.J, seed=self.seed, std_errors=std_errors,
        )

    def study_config(self, full: bool = False) -> StudyConfig:
        T, J, R = self.T, self.J, self.replications
        if full:
            T, J, R = settings.FULL_SAMPLE_SIZE, settings.FULL_TRUNCATION, settings.FULL_REPLICATIONS
        return StudyConfig(
            d_values=self.d_values, k_values=self.k_values, designs=self.designs,
            T=T, replications=R, base_seed=self.seed, truncation=J, burn_in=self.m,
            optimizer=self.optimizer_options(std_errors=False).model_copy(update={"truncation": J}),
            n_workers=self.n_workers, include_nonconverged=self.include_nonconverged,
        )


def _raise_config_error(exc: ValidationError, lines: Dict[str, int], raw: Dict[str, str]):
    err = exc.errors()[0]
    key = str(err["loc"][0]) if err["loc"] else None
    line = lines.get(key) if key else None
    if err["type"] == "extra_forbidden":
        raise ConfigError("unknown key", key=key, line=line)
    if key in RANGES and err["type"] in ("greater_than", "greater_than_equal", "less_than", "less_than_equal"):
        raise ConfigError(f"value {raw.get(key)!r} outside the legal interval {key} in {RANGES[key]}", key=key, line=line)
    raise ConfigError(err["msg"], key=key, line=line)


def parse_config(text: str) -> RunConfig:
    raw: Dict[str, str] = {}
    lines: Dict[str, int] = {}
    for binding in parse_stream(StringIO(text)):
        line = binding.original.line
        if binding.error:
            raise ConfigError(f"cannot parse {binding.original.string.strip()!r}", line=line)
        if binding.key is None:
            continue
        if binding.value is None:
            raise ConfigError("missing value", key=binding.key, line=line)
        if binding.key in raw:
            raise ConfigError(f"duplicate key (first set on line {lines[binding.key]})", key=binding.key, line=line)
        raw[binding.key] = binding.value
        lines[binding.key] = line

    try:
        cfg = RunConfig(**raw)
    except ValidationError as e:
        _raise_config_error(e, lines, raw)

    defaulted = sorted(set(RunConfig.model_fields) - set(raw))
    logger.info(f"Run config: {len(raw)} key(s) set, defaults applied for {', '.join(defaulted) or 'none'}")
    logger.debug("Effective config:\n" + echo_config(cfg))
    return cfg


def _render(value) -> str:
    if isinstance(value, tuple):
        return ", ".join(_render(v) for v in value)
    if hasattr(value, "value"):
        return str(value.value)
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def echo_config(cfg: RunConfig) -> str:
    """Render every effective key; `parse_config(echo_config(cfg)) == cfg`."""
    lines = []
    for name, value in cfg.model_dump().items():
        if value is None:
            continue
        text = _render(getattr(cfg, name))
        lines.append(f'{name} = "{text}"' if "," in text or not text else f"{name} = {text}")
    return "\n".join(lines) + "\n"


def load_config(path: str) -> RunConfig:
    try:
        with open(path, encoding="utf-8") as fh:
            return parse_config(fh.read())
    except OSError as e:
        raise ConfigError(f"cannot read config file {path}: {e}")
