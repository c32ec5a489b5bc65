"""Module for the validated command-line configuration."""

from pathlib import Path
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field

from anovats.enumerations import Layout, Subcommand


class CliConfig(BaseModel):
    """The parsed command line of one invocation.

    Every option defaults to None so that unset flags leave the YAML and environment values in
    place.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    subcommand: Subcommand
    input: Optional[Path] = None
    output: Optional[Path] = None
    layout: Optional[Layout] = None
    alpha: Optional[float] = Field(default=None, gt=0, lt=1)
    c: Optional[float] = Field(default=None, gt=0)
    b: Optional[int] = Field(default=None, ge=2)
    seed: Optional[int] = Field(default=None, ge=0)
    reps: Optional[int] = Field(default=None, ge=1)
    quick: Optional[bool] = None
    max_missing_fraction: Optional[float] = Field(default=None, ge=0, le=1)
    time_from: Optional[str] = None
    time_to: Optional[str] = None
    config: Optional[Path] = None
    format: str = Field(default="text", pattern="^(text|json)$")
    """Output format of the ``cluster`` subcommand."""

    def overrides(self) -> dict:
        """Return the settings values given on the command line."""
        return self.model_dump(exclude={"subcommand", "config", "format"}, exclude_none=True)
