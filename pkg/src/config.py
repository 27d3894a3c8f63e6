"""Configuration module for the divpoly toolkit."""

from typing import Tuple

from dotenv import load_dotenv
from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

# Load environment variables from .env file for local development
load_dotenv()

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


def parse_range(text: str) -> Tuple[int, int]:
    """
    Parse a range written as ``LO..HI``.

    Args:
        text: Range text, e.g. ``"1..10000"``

    Returns:
        Tuple ``(lo, hi)`` with ``1 <= lo <= hi``

    Raises:
        ValueError: If the text is malformed or the bounds are out of order
    """
    parts = text.strip().split("..")
    if len(parts) != 2:
        raise ValueError(f"range must look like LO..HI, got {text!r}")
    try:
        lo, hi = int(parts[0]), int(parts[1])
    except ValueError:
        raise ValueError(f"range bounds must be integers, got {text!r}") from None
    if lo < 1 or hi < lo:
        raise ValueError(f"range needs 1 <= LO <= HI, got {text!r}")
    return lo, hi


class Settings(BaseSettings):
    """Application settings loaded from environment variables."""

    model_config = SettingsConfigDict(
        env_prefix="DIVPOLY_",
        env_file=".env",
        case_sensitive=False,
        extra="ignore",  # Ignore extra fields from .env
    )

    # Application Settings
    environment: str = Field(default="development")
    log_level: str = Field(default="WARNING")

    # Verification sweeps
    default_workers: int = Field(default=1, ge=1)
    chunk_size: int = Field(default=500, ge=1)
    dense_limit: int = Field(default=1_000_000, ge=1)

    # Generating product truncation order
    series_order: int = Field(default=48, ge=1)

    # OEIS cross-check
    oeis_max_index: int = Field(default=10_000, ge=1)

    # Report output
    output_dir: str = Field(default="output")
    save_reports: bool = Field(default=False)

    # Default verify ranges, written as LO..HI
    range_theorem_main: str = Field(default="1..10000")
    range_p_identities: str = Field(default="1..2000")
    range_closure: str = Field(default="1..2000")
    range_lemmas: str = Field(default="1..10000")
    range_structural: str = Field(default="1..5000")
    range_oracle: str = Field(default="1..500")
    range_paths: str = Field(default="1..2000")

    @field_validator(
        "range_theorem_main",
        "range_p_identities",
        "range_closure",
        "range_lemmas",
        "range_structural",
        "range_oracle",
        "range_paths",
    )
    @classmethod
    def _check_range(cls, value: str) -> str:
        parse_range(value)
        return value

    @field_validator("log_level")
    @classmethod
    def _check_log_level(cls, value: str) -> str:
        level = value.upper()
        if level not in LOG_LEVELS:
            raise ValueError(f"unknown log level {value!r}")
        return level

    def default_range(self, suite: str) -> Tuple[int, int]:
        """Return the configured default range for a verify suite."""
        attr = "range_" + suite.replace("-", "_")
        return parse_range(getattr(self, attr))


# Create a global settings instance
settings = Settings()


def is_production() -> bool:
    """Check if the application is running in production."""
    return settings.environment.lower() == "production"
