"""Module app settings model."""

from enum import Enum
from pathlib import Path
from typing import Optional

from pydantic import BaseModel, Field, ValidationInfo, field_validator
from pydantic_settings import SettingsConfigDict

from anovats.core.block import DEFAULT_BLOCK_CONSTANT, BlockRule
from anovats.core.decision import DEFAULT_ALPHA
from anovats.enumerations import Layout
from anovats.exceptions import ConfigurationError
from anovats.settings.base import SettingsBase


class AppSettings(SettingsBase):
    """Analysis options shared by every subcommand."""

    model_config = SettingsConfigDict(
        case_sensitive=False,
        env_prefix="ANOVATS_",
        env_file=".env",
        env_file_encoding="utf-8",
        env_nested_delimiter="__",
        extra="ignore",
        validate_assignment=True,
    )

    input: Optional[Path] = None
    output: Optional[Path] = None
    layout: Layout = Layout.LONG
    alpha: float = Field(default=DEFAULT_ALPHA, gt=0, lt=1)
    c: float = Field(default=DEFAULT_BLOCK_CONSTANT, gt=0)
    b: Optional[int] = Field(default=None, ge=2)
    seed: int = Field(default=0, ge=0)
    max_missing_fraction: Optional[float] = Field(default=None, ge=0, le=1)
    time_from: Optional[str] = None
    time_to: Optional[str] = None

    @field_validator("input", "output", mode="before")
    @classmethod
    def validate_path(cls, value, info: ValidationInfo):  # pylint: disable=unused-argument
        """Validate the path.

        Args:
            value (Any): The value to validate.
            info (ValidationInfo): The validation information.

        Returns:
            Path: The value as a Path object.

        """
        if value is None or isinstance(value, Path):
            return value
        return Path(value)

    @field_validator("time_from", "time_to", mode="before")
    @classmethod
    def validate_time_label(cls, value, info: ValidationInfo):  # pylint: disable=unused-argument
        """Read numeric time labels, such as years in YAML, as strings."""
        if value is None:
            return value
        return str(value)

    @property
    def block_rule(self) -> BlockRule:
        """The block rule of the configured constant and override."""
        return BlockRule(c=self.c, override_b=self.b)

    def load(self, **kwargs) -> None:
        """Load the given settings into the application settings.

        Keys that are not settings are ignored; None values leave the current value in place.

        Args:
            **kwargs: The settings to load into the application settings.

        """
        for key, value in kwargs.items():
            if not hasattr(self, key) or value is None:
                continue

            if isinstance(getattr(self, key), BaseModel):
                setattr(self, key, type(getattr(self, key)).model_validate(value))
            elif isinstance(getattr(self, key), Enum):
                setattr(self, key, type(getattr(self, key))(value))
            else:
                setattr(self, key, value)

    def time_range(self) -> Optional[tuple[str, str]]:
        """Return the configured (from, to) time labels, or None.

        Raises:
            ConfigurationError: If only one end of the range is set.

        """
        if self.time_from is None and self.time_to is None:
            return None
        if self.time_from is None or self.time_to is None:
            raise ConfigurationError("--from and --to must be given together")
        return self.time_from, self.time_to
