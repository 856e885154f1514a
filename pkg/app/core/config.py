from typing import Optional
from pydantic import model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict
from functools import lru_cache


class Settings(BaseSettings):
    PROJECT_NAME: str = "Overshoot Extensions"

    # Environment
    ENVIRONMENT: str = "development"
    DEBUG: bool = True
    LOG_LEVEL: Optional[str] = None

    # Output
    OUTPUT_DIR: str = "./out"
    CSV_FLOAT_FORMAT: str = "%.17g"

    # Finite-difference eigensolver
    FD_GRID: float = 1.0 / 200.0
    FD_TRUNCATION: float = 20.0
    FD_HALF_LINE_TRUNCATION: float = 25.0
    THRESHOLD_MARGIN: float = 1e-3
    ISOSPECTRAL_RTOL: float = 1e-3
    ENLARGEMENT_FACTOR: float = 1.25
    ENLARGEMENT_TOL: float = 1e-6
    FD_ENDPOINT_OFFSET: float = 1e-4
    FD_ENDPOINT_SLOPE_TOL: float = 1e-3

    # Quadrature
    QUAD_TAIL_CUTOFF: float = 1e-18
    QUAD_RTOL: float = 1e-10
    QUAD_SCAN_POINTS: int = 4001

    # Exact identity sampling
    IDENTITY_MIN_SAMPLES: int = 64

    # Random generic specs (degree-law sampler)
    MAX_RANDOM_DENOMINATOR: int = 12

    @model_validator(mode="after")
    def validate_environment(self):
        # Warn but never crash on a questionable combination
        if self.ENVIRONMENT.lower() == "production" and self.DEBUG:
            import logging
            logging.warning("DEBUG is enabled in a production environment.")
        return self

    @property
    def effective_log_level(self) -> str:
        if self.LOG_LEVEL:
            return self.LOG_LEVEL.upper()
        return "INFO" if self.ENVIRONMENT == "production" else "DEBUG"

    model_config = SettingsConfigDict(env_file=".env", case_sensitive=True, extra="ignore")


@lru_cache
def get_settings():
    return Settings()


settings = get_settings()
