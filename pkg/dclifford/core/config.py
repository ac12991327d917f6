from fractions import Fraction
from typing import Any, Dict, List, Optional

from pydantic import field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Library and CLI settings.

    Values are read from the environment (prefix ``DCLIFFORD_``) and from an
    optional ``.env`` file. Environment variables take precedence over the
    defaults defined here.

    Example:
        ``DCLIFFORD_RANDOM_TRIALS=5`` shrinks the claim registry's random
        sampling to five polynomials per grid cell.
    """
    # CORE SETTINGS
    app_name: str = "dclifford"
    app_description: str = "Exact discrete Clifford analysis toolkit"

    # LOGGING SETTINGS
    log_level: str = "WARNING"
    log_file: Optional[str] = None

    # REGISTRY GRID SETTINGS
    # Comma-separated lists so they can be set from the environment
    default_seed: int = 0
    grid_dimensions: str = "1,2,3"
    grid_max_degree: int = 4
    grid_mesh_widths: str = "1,1/2,1/4"
    random_trials: int = 25
    registry_workers: int = 1

    # NUMERIC SETTINGS
    stirling_cap: int = 32
    # Lattice points |m_i| <= oracle_radius are used by stencil comparisons
    oracle_radius: int = 2
    limit_levels: int = 6
    limit_window_start: int = 4
    limit_ratio_low: str = "9/5"
    limit_ratio_high: str = "11/5"

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        env_prefix="DCLIFFORD_",
        case_sensitive=False,
        extra="ignore",
    )

    @field_validator("grid_dimensions", "grid_mesh_widths", mode="before")
    @classmethod
    def normalize_grid_list(cls, v: Any) -> str:
        """Accept lists as well as comma-separated strings for grid values."""
        if isinstance(v, (list, tuple)):
            return ",".join(str(item) for item in v)
        if isinstance(v, str):
            return ",".join(item.strip() for item in v.split(",") if item.strip())
        raise ValueError(v)

    @field_validator("log_level", mode="before")
    @classmethod
    def normalize_log_level(cls, v: Any) -> str:
        level = str(v).upper()
        if level not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
            raise ValueError(f"unknown log level {v}")
        return level

    def dimensions(self) -> List[int]:
        return [int(item) for item in self.grid_dimensions.split(",")]

    def mesh_widths(self) -> List[Fraction]:
        return [Fraction(item) for item in self.grid_mesh_widths.split(",")]

    def limit_ratio_bounds(self) -> tuple:
        return Fraction(self.limit_ratio_low), Fraction(self.limit_ratio_high)


# Create a global settings instance
settings = Settings()


def get_settings_dict() -> Dict[str, Any]:
    """Return settings as a dictionary for easy access."""
    return settings.model_dump()


def get_setting(key: str, default: Any = None) -> Any:
    """Get a specific setting by key with an optional default value."""
    return getattr(settings, key, default)
