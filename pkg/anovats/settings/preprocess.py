"""Settings for the preprocess subcommand."""

from pathlib import Path
from typing import Optional

from pydantic import Field, model_validator

from anovats.preprocess.boxcox import LAMBDA_GRID, LAMBDA_STEP
from anovats.preprocess.impute import DEFAULT_MAX_ORDER
from anovats.settings.app import AppSettings


class PreprocessSettings(AppSettings):
    """Settings for the seasonal aggregation and imputation pipeline."""

    max_order: int = Field(default=DEFAULT_MAX_ORDER, ge=1)
    lambda_min: float = LAMBDA_GRID[0]
    lambda_max: float = LAMBDA_GRID[1]
    lambda_step: float = Field(default=LAMBDA_STEP, gt=0)
    shift: float = Field(default=0.0, ge=0)
    sidecar: Optional[Path] = None
    """Where to write the per-series fits; defaults to the output path with a ``.json`` suffix."""

    @model_validator(mode="after")
    def validate_lambda_grid(self) -> "PreprocessSettings":
        """Validate the Box-Cox search interval."""
        if self.lambda_min >= self.lambda_max:
            raise ValueError("lambda_min must be below lambda_max")
        return self

    @property
    def sidecar_path(self) -> Optional[Path]:
        """The JSON sidecar path, or None when writing to stdout."""
        if self.sidecar is not None:
            return self.sidecar
        if self.output is not None:
            return self.output.with_suffix(".json")
        return None
