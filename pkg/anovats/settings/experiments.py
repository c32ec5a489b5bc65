"""Settings for the size and power subcommands."""

from typing import Optional

from pydantic import Field

from anovats.harness.experiment import PowerExperiment, SizeExperiment
from anovats.settings.app import AppSettings


class SizeSettings(AppSettings):
    """Settings for the empirical size experiment."""

    quick: bool = False
    reps: Optional[int] = Field(default=None, ge=1)
    experiment: Optional[SizeExperiment] = None
    """Grid overrides; the full grid when unset."""

    def build_experiment(self) -> SizeExperiment:
        """Return the experiment with the reduced grid, the repetitions and alpha applied."""
        overrides = self.experiment.model_dump(exclude_unset=True) if self.experiment is not None else {}
        overrides["alpha"] = self.alpha
        if self.reps is not None:
            overrides["reps"] = self.reps
        if self.quick:
            return SizeExperiment.quick(**overrides)
        return SizeExperiment(**overrides)


class PowerSettings(AppSettings):
    """Settings for the power experiment."""

    quick: bool = False
    reps: Optional[int] = Field(default=None, ge=1)
    experiment: Optional[PowerExperiment] = None
    """Grid overrides; the full grid when unset."""

    def build_experiment(self) -> PowerExperiment:
        """Return the experiment with the reduced grid, the repetitions, alpha and c applied."""
        overrides = self.experiment.model_dump(exclude_unset=True) if self.experiment is not None else {}
        overrides["alpha"] = self.alpha
        overrides.setdefault("c", self.c)
        if self.reps is not None:
            overrides["reps"] = self.reps
        if self.quick:
            return PowerExperiment.quick(**overrides)
        return PowerExperiment(**overrides)
