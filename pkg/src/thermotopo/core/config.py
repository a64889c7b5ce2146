"""
Thermotopo - Application Configuration
"""

from functools import lru_cache

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Runtime tunables loaded from environment variables."""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=True,
        extra="ignore",
    )

    # -------------------------------------------------------------------------
    # Application
    # -------------------------------------------------------------------------
    APP_ENV: str = Field(default="development")
    APP_DEBUG: bool = Field(default=False)

    # -------------------------------------------------------------------------
    # Resource caps
    # -------------------------------------------------------------------------
    MAX_DENSE_DIM: int = Field(default=4096)
    MAX_LIOUVILLE_DIM: int = Field(default=64)  # d; superoperator is d^2 x d^2
    MAX_TOY_PARTICLES: int = Field(default=8)

    # -------------------------------------------------------------------------
    # Spectral structure
    # -------------------------------------------------------------------------
    GAP_THRESHOLD: float = Field(default=0.1)  # units of t
    SPECTRUM_LEVELS: int = Field(default=200)
    DEGENERACY_TOLERANCE: float = Field(default=1e-9)
    CHECK_EIGEN_RESIDUALS: bool = Field(default=False)

    # -------------------------------------------------------------------------
    # Twist grids and Wilson loops
    # -------------------------------------------------------------------------
    GRID_NX: int = Field(default=12)
    GRID_NY: int = Field(default=12)
    LARGE_MANIFOLD_DIM: int = Field(default=9)
    LARGE_GRID_NX: int = Field(default=24)
    LARGE_GRID_NY: int = Field(default=16)
    MIN_SINGULAR_VALUE: float = Field(default=1e-3)
    WINDING_TOLERANCE: float = Field(default=1e-3)
    MAX_REFINEMENTS: int = Field(default=2)
    BAND_GAP_TOLERANCE: float = Field(default=1e-6)

    # -------------------------------------------------------------------------
    # Open systems
    # -------------------------------------------------------------------------
    LIOUVILLE_ZERO_TOLERANCE: float = Field(default=1e-9)  # relative to ||L||

    # -------------------------------------------------------------------------
    # Execution and output
    # -------------------------------------------------------------------------
    DEFAULT_WORKERS: int = Field(default=1)
    DEFAULT_SEED: int = Field(default=0)
    REPORT_ELAPSED: bool = Field(default=True)
    METRICS_TEXTFILE: str = Field(default="")


@lru_cache
def get_settings() -> Settings:
    """Get cached settings instance."""
    return Settings()


settings = get_settings()
