from pydantic_settings import BaseSettings
from pydantic import field_validator

from typing import Optional

LOG_LEVELS = {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}


class Settings(BaseSettings):
    # Application
    APP_NAME: str = "braidtrace"
    VERSION: str = "0.1.0"

    # Logging
    LOG_LEVEL: str = "WARNING"
    LOG_FILE: Optional[str] = None

    # Fourier tables shipped in braidtrace/data/fourier unless overridden
    DATA_DIR: Optional[str] = None

    # Exact series and group enumeration
    SERIES_ORDER: int = 20
    MAX_GROUP_ORDER: int = 1_000_000

    # Finite-field enumeration guards
    FF_MAX_Q: int = 7
    FF_MAX_WRITHE_RANK1: int = 14
    FF_MAX_WRITHE_RANK2: int = 8
    FF_MAX_ENUMERATION: int = 2_000_000
    X0_MAX_Q: int = 31
    X0_MAX_WRITHE: int = 10

    # Random braids per property in the test suite
    PROPERTY_SAMPLES: int = 200

    @field_validator("LOG_LEVEL", mode="before")
    @classmethod
    def normalize_log_level(cls, v):
        level = str(v).upper()
        if level not in LOG_LEVELS:
            raise ValueError(f"Unknown log level: {v}")
        return level

    @field_validator(
        "SERIES_ORDER", "MAX_GROUP_ORDER", "FF_MAX_Q", "FF_MAX_WRITHE_RANK1",
        "FF_MAX_WRITHE_RANK2", "FF_MAX_ENUMERATION", "X0_MAX_Q", "X0_MAX_WRITHE",
        "PROPERTY_SAMPLES",
    )
    @classmethod
    def positive_limit(cls, v: int) -> int:
        if v <= 0:
            raise ValueError("limits must be positive")
        return v

    class Config:
        env_file = ".env"
        env_prefix = "BRAIDTRACE_"
        case_sensitive = True
        extra = "ignore"


settings = Settings()
