"""Runtime configuration loaded from the environment or a .env file."""

from functools import lru_cache

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """
    Toolkit settings.

    Every field can be set through an environment variable with the
    ``PLINEAR_`` prefix (for example ``PLINEAR_THREADS=4``) or through a
    ``.env`` file in the working directory. Command-line flags override both.
    """

    threads: int = Field(default=1, ge=1)
    ct_cap_low_dim: int = Field(default=2000, ge=1)
    ct_cap_high_dim: int = Field(default=200, ge=1)
    series_cap: int = Field(default=120, ge=1)
    max_report_failures: int = Field(default=10, ge=1)

    model_config = SettingsConfigDict(
        env_prefix="PLINEAR_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    def ct_cap(self, nvars: int) -> int:
        """Largest power the constant-term oracle may expand for ``nvars`` variables."""
        return self.ct_cap_low_dim if nvars <= 2 else self.ct_cap_high_dim


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """Return the process-wide settings instance."""
    return Settings()
