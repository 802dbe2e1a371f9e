from typing import Tuple
from pydantic import BaseModel, ConfigDict, Field, model_validator

from app.core.config import settings
from app.core.enums import Design, InterceptVariant, OptimizerMethod

class ModelParams(BaseModel):
    """
    Full parameter vector of the A-Realized HYGARCH(1,d,1,k) model.

    `xi` is the measurement intercept (also written epsilon), `phi_meas` the
    loading of log h_t in the measurement equation. d = 0 and sigma_u2 = 0 are
    admitted for degenerate simulations; the likelihood rejects sigma_u2 <= 0.
    """
    model_config = ConfigDict(frozen=True)

    omega0: float = 0.1
    gamma: float = Field(0.1, gt=-1.0, lt=1.0)
    beta: float = Field(0.4, gt=-1.0, lt=1.0)
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

    @model_validator(mode="after")
    def _check_harmonics(self) -> "ModelParams":
        if len(self.fourier_a) != len(self.fourier_b):
            raise ValueError(
                f"fourier_a and fourier_b must have the same length "
                f"({len(self.fourier_a)} != {len(self.fourier_b)})"
            )
        return self

    @property
    def k(self) -> int:
        return len(self.fourier_a)

    @classmethod
    def baseline(cls, d: float = 0.35, k: int = 0) -> "ModelParams":
        """Simulation-study parameters: omega=0.1, gamma=0.1, beta=0.4, delta=0.9, xi=0, phi=1,
        tau=(-0.08, 0.06), sigma_u^2=0.4, nu=3."""
        return cls(d=d, fourier_a=(0.0,) * k, fourier_b=(0.0,) * k)

    def with_order(self, k: int) -> "ModelParams":
        """Same parameters with the Fourier order resized to k (new harmonics start at zero)."""
        a = tuple(self.fourier_a[:k]) + (0.0,) * max(0, k - self.k)
        b = tuple(self.fourier_b[:k]) + (0.0,) * max(0, k - self.k)
        return self.model_copy(update={"fourier_a": a, "fourier_b": b})

class InterceptSpec(BaseModel):
    """
    Time-varying intercept omega_t over t = 1..T.

    Step designs switch at integer break points: step_m2 at T//2 + 1,
    step_m3 at T//3 + 1 and 2*T//3 + 1.
    """
    model_config = ConfigDict(frozen=True)

    variant: InterceptVariant
    T: int = Field(ge=1)
    levels: Tuple[float, ...] = ()
    a: Tuple[float, ...] = ()
    b: Tuple[float, ...] = ()

    @model_validator(mode="after")
    def _check_variant(self) -> "InterceptSpec":
        expected = {
            InterceptVariant.FOURIER: 0,
            InterceptVariant.STEP_M1: 1,
            InterceptVariant.STEP_M2: 2,
            InterceptVariant.STEP_M3: 3,
        }[self.variant]
        if len(self.levels) != expected:
            raise ValueError(f"{self.variant.value} needs {expected} level(s), got {len(self.levels)}")
        if len(self.a) != len(self.b):
            raise ValueError("harmonic coefficient lists a and b differ in length")
        if self.variant != InterceptVariant.FOURIER and self.a:
            raise ValueError("harmonic coefficients only apply to the fourier variant")
        if self.variant == InterceptVariant.STEP_M3 and self.T < 3:
            raise ValueError("step_m3 needs T >= 3")
        return self

    @property
    def k(self) -> int:
        return len(self.a)

    @property
    def break_points(self) -> Tuple[int, ...]:
        """First time index of each new regime."""
        if self.variant == InterceptVariant.STEP_M2:
            return (self.T // 2 + 1,)
        if self.variant == InterceptVariant.STEP_M3:
            return (self.T // 3 + 1, 2 * self.T // 3 + 1)
        return ()

    @classmethod
    def fourier(cls, T: int, a: Tuple[float, ...] = (), b: Tuple[float, ...] = ()) -> "InterceptSpec":
        return cls(variant=InterceptVariant.FOURIER, T=T, a=tuple(a), b=tuple(b))

    @classmethod
    def step_m1(cls, T: int, omega: float) -> "InterceptSpec":
        return cls(variant=InterceptVariant.STEP_M1, T=T, levels=(omega,))

    @classmethod
    def step_m2(cls, T: int, omega_low: float, omega_high: float) -> "InterceptSpec":
        return cls(variant=InterceptVariant.STEP_M2, T=T, levels=(omega_low, omega_high))

    @classmethod
    def step_m3(cls, T: int, omega1: float, omega2: float, omega3: float) -> "InterceptSpec":
        return cls(variant=InterceptVariant.STEP_M3, T=T, levels=(omega1, omega2, omega3))

    def for_params(self, params: ModelParams) -> "InterceptSpec":
        """Fourier specs take their harmonics from the parameter vector; step specs are returned as is."""
        if self.variant != InterceptVariant.FOURIER:
            return self
        return self.model_copy(update={"a": tuple(params.fourier_a), "b": tuple(params.fourier_b)})

class SimConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    params: ModelParams
    intercept: InterceptSpec
    T: int = Field(ge=1)
    burn_in: int = Field(default=settings.BURN_IN, ge=0)
    truncation: int = Field(default=settings.DGP_TRUNCATION, ge=1)
    seed: int = Field(default=settings.SEED, ge=0)
    stream_id: int = Field(default=0, ge=0)

    @model_validator(mode="after")
    def _check_sample(self) -> "SimConfig":
        if self.intercept.T != self.T:
            raise ValueError(f"intercept spec covers T={self.intercept.T}, config asks for T={self.T}")
        return self

class OptimizerOptions(BaseModel):
    model_config = ConfigDict(frozen=True)

    method: OptimizerMethod = OptimizerMethod.NELDER_MEAD
    n_starts: int = Field(default=settings.N_STARTS, ge=1)
    max_iter: int = Field(default=settings.MAX_ITER, ge=1)
    xatol: float = Field(default=1e-5, gt=0.0)
    fatol: float = Field(default=1e-7, gt=0.0)
    truncation: int = Field(default=settings.TRUNCATION, ge=1)
    seed: int = Field(default=settings.SEED, ge=0)
    std_errors: bool = True

class StudyConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    d_values: Tuple[float, ...] = (0.25, 0.35, 0.45)
    k_values: Tuple[int, ...] = (0,)
    designs: Tuple[Design, ...] = (Design.M1,)
    T: int = Field(default=settings.SAMPLE_SIZE, ge=3)
    replications: int = Field(default=settings.REPLICATIONS, ge=1)
    base_seed: int = Field(default=settings.SEED, ge=0)
    truncation: int = Field(default=settings.TRUNCATION, ge=1)
    burn_in: int = Field(default=settings.BURN_IN, ge=0)
    optimizer: OptimizerOptions = OptimizerOptions(std_errors=False)
    n_workers: int = Field(default=settings.N_WORKERS, ge=1)
    include_nonconverged: bool = True

    @model_validator(mode="after")
    def _check_grid(self) -> "StudyConfig":
        if not self.d_values or not self.k_values or not self.designs:
            raise ValueError("study needs at least one d value, one k value and one design")
        if any(not 0.0 <= d < 1.0 for d in self.d_values):
            raise ValueError("d values must lie in [0, 1)")
        if any(k < 0 for k in self.k_values):
            raise ValueError("Fourier orders must be non-negative")
        return self
