"""Base settings for the application."""

from typing import Literal, Optional

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

LogLevel = Literal["CRITICAL", "ERROR", "WARNING", "INFO", "DEBUG"]


class SettingsBase(BaseSettings):
    """The application settings read from the environment (prefix ``ANOVATS_``) and ``.env``."""

    model_config = SettingsConfigDict(
        case_sensitive=False,
        env_prefix="ANOVATS_",
        env_file=".env",
        env_file_encoding="utf-8",
        env_nested_delimiter="__",
        extra="ignore",
    )

    log_level: LogLevel = "INFO"
    dev_mode: bool = False
    """Colourised console logging."""
    threads: Optional[int] = Field(default=None, ge=1)
    """Cap on the harness worker count; all cores when unset."""


settings = SettingsBase()
