"""
Core configuration settings for the IRTS skyline toolkit
Values can be overridden through the environment or a .env file.
"""
from pydantic_settings import BaseSettings, SettingsConfigDict
from functools import lru_cache


class Settings(BaseSettings):
    """Application settings"""

    # Project info
    PROJECT_NAME: str = "irts-skyline"
    VERSION: str = "1.0.0"
    LOG_LEVEL: str = "INFO"

    # Numerics
    COST_EPSILON: float = 1e-9

    # Solvers
    DEFAULT_K: int = 5
    EXACT_MAX_PREF_COST: float = 1000.0

    # Oracle limits
    ORACLE_MAX_VERTICES: int = 14
    ORACLE_MAX_TASKS: int = 4
    ORACLE_MAX_PATHS: int = 10_000_000

    # Synthetic networks
    GRID_ROWS: int = 200
    GRID_COLS: int = 200
    GRID_CELL_SIZE: float = 50.0
    GRID_TASKS: int = 1000

    # Scenario generation
    SCENARIO_MAX_DRAWS: int = 1000
    SCENARIO_COST_TOLERANCE: float = 0.2

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=True,
        extra="ignore",
    )


@lru_cache()
def get_settings() -> Settings:
    """Get cached settings instance"""
    return Settings()


settings = get_settings()

# Shorthand used by every cost comparison
EPS = settings.COST_EPSILON
