from pydantic_settings import BaseSettings, SettingsConfigDict

class Settings(BaseSettings):
    PROJECT_NAME: str = "A-Realized HYGARCH toolkit"
    ENVIRONMENT: str = "production"

    @property
    def is_dev(self) -> bool:
        return self.ENVIRONMENT.lower() == "development"

    # Logging
    LOG_LEVEL: str = "WARNING"

    # Lag polynomial truncation
    DGP_TRUNCATION: int = 3000   # Realized ARCH(3000) data-generating filter
    TRUNCATION: int = 1000       # default for filtering, estimation and desk-scale runs

    # Simulation
    BURN_IN: int = 1000
    SAMPLE_SIZE: int = 1000
    OVERFLOW_LOG_H: float = 50.0

    # Monte Carlo (desk scale, and the --full scale)
    REPLICATIONS: int = 100
    FULL_REPLICATIONS: int = 500
    FULL_SAMPLE_SIZE: int = 3000
    FULL_TRUNCATION: int = 3000
    N_WORKERS: int = 1

    # Estimation
    N_STARTS: int = 3
    MAX_ITER: int = 4000
    LOGLIK_SENTINEL: float = -1e300

    # Reproducibility
    SEED: int = 20240501

    model_config = SettingsConfigDict(env_file=".env", case_sensitive=True, extra="ignore")

settings = Settings()
