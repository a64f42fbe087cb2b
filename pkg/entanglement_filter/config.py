"""
SETTINGS - Numerical defaults and runtime knobs
Values come from (highest first) ENTANGLEMENT_FILTER_* environment variables,
a local .env file, then the defaults below.

DEFAULT GRIDS:
✅ Filter sweeps: 201 points on [0, 1]
✅ Noise sweeps: 401 points on [0, 4] in dimensionless time
✅ Curve family for the noise figures: k in {0, 0.25, 0.5, 0.75, 1}

ESD SEARCH:
- Grid scan with step 0.05 up to a horizon of 20
- Bisection to an interval narrower than 1e-6
- A zero only counts once it persists for 0.5 in time
"""

from functools import lru_cache
from typing import List

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Process-wide defaults for sweeps, ESD search and output"""

    model_config = SettingsConfigDict(
        env_prefix="ENTANGLEMENT_FILTER_",
        env_file=".env",
        extra="ignore",
    )

    log_level: str = Field("WARNING", description="structlog level name")
    log_json: bool = Field(False, description="Render log lines as JSON")

    k_points: int = Field(201, ge=2, description="Points in the default k grid")
    gamma_t_points: int = Field(401, ge=2, description="Points in the default Γt grid")
    gamma_t_max: float = Field(4.0, gt=0.0, description="Upper end of the default Γt grid")
    k_family: List[float] = Field(
        default_factory=lambda: [0.0, 0.25, 0.5, 0.75, 1.0],
        description="Filter parameters plotted in the noise figures",
    )

    esd_scan_step: float = Field(0.05, gt=0.0, description="Bracketing scan step in Γt")
    esd_tolerance: float = Field(1e-6, gt=0.0, description="Bisection interval width")
    esd_horizon: float = Field(20.0, gt=0.0, description="Largest Γt searched for ESD")
    esd_persistence: float = Field(0.5, ge=0.0, description="Window a zero must persist for")

    csv_significant_digits: int = Field(12, ge=1, le=17)
    max_workers: int = Field(1, ge=1, description="Thread pool size for grid evaluation")

    @field_validator("log_level")
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        """Accept any standard level name, case-insensitively"""
        level = v.upper()
        if level not in {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}:
            raise ValueError(f"unknown log level: {v}")
        return level

    @field_validator("k_family")
    @classmethod
    def validate_k_family(cls, v: List[float]) -> List[float]:
        """Every curve parameter must be a valid filtering parameter"""
        if not v:
            raise ValueError("k_family must not be empty")
        for k in v:
            if not 0.0 <= k <= 1.0:
                raise ValueError(f"k_family values must lie in [0, 1], got {k}")
        return v


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """Cached settings instance"""
    return Settings()


__all__ = ["Settings", "get_settings"]
