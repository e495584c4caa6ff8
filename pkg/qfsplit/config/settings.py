# qfsplit/config/settings.py
from pydantic_settings import BaseSettings, SettingsConfigDict
from typing import List

class Settings(BaseSettings):
    # Witt table settings
    WITT_LENGTH_CAP: int = 5

    # Height computation settings
    MAX_LEVEL: int = 6
    EXPONENT_BOUND: int = 4096

    # Enumeration settings
    BATCH_SIZE: int = 4096
    ENUM_WORKERS: int = 1
    SAMPLE_RETRY_BUDGET: int = 2000
    EXHAUSTIVE_LIMIT: int = 1 << 25

    SUPPORTED_PRIMES: List[int] = [2, 3, 5]
    LOG_LEVEL: str = "WARNING"
    REPORT_SCHEMA_VERSION: str = "1"

    model_config = SettingsConfigDict(env_file=".env", env_prefix="QFS_")

settings = Settings()
