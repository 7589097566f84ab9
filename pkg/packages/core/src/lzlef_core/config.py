"""Library configuration via environment variables."""

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class LzlefSettings(BaseSettings):
    """Settings loaded from environment variables."""

    model_config = SettingsConfigDict(
        env_prefix="LZLEF_", env_file=".env", extra="ignore"
    )

    # Default cap for explicit tiling enumeration
    limit: int = Field(default=1_000_000, ge=1)

    # Permanent kernels: Gray-code inclusion-exclusion up to this order,
    # column-bitmask memo up to memo_max_order, plain backtracking beyond.
    ryser_max_order: int = Field(default=12, ge=0)
    memo_max_order: int = Field(default=64, ge=0)

    # CLI
    log_level: str = "WARNING"
    jobs: int = Field(default=1, ge=1)


settings = LzlefSettings()
