"""Monte Carlo experiment definitions and their reports."""

__all__ = [
    "SizeExperiment",
    "PowerExperiment",
    "ExperimentRow",
    "ExperimentReport",
    "REPORT_COLUMNS",
    "SIZE_METRIC",
    "REDRAW_METRIC",
]

import io
import logging
from pathlib import Path
from typing import Optional

import numpy as np
import pandas as pd
from pydantic import BaseModel, Field, field_validator

from anovats._types import StrPath
from anovats.enumerations import PowerMetric

logger = logging.getLogger(__name__)

REPORT_COLUMNS = ["process", "case", "a", "n", "c", "reps", "seed", "metric", "value"]
"""Columns of the experiment CSV."""
SIZE_METRIC = "empirical_size"
REDRAW_METRIC = "garch_redraws"
"""Redraws after GARCH variance explosions, summed over the replications of a cell."""

DEFAULT_REPS = 200
DEFAULT_N_LIST = [20, 30, 50, 70, 100]
DEFAULT_PROCESSES = [1, 2, 3, 4]
DEFAULT_CASES = [1, 2]


class _Experiment(BaseModel):
    n_list: list[int] = Field(default_factory=lambda: list(DEFAULT_N_LIST))
    reps: int = Field(default=DEFAULT_REPS, ge=1)
    alpha: float = Field(default=0.05, gt=0, lt=1)
    processes: list[int] = Field(default_factory=lambda: list(DEFAULT_PROCESSES))
    cases: list[int] = Field(default_factory=lambda: list(DEFAULT_CASES))

    @field_validator("processes")
    @classmethod
    def validate_processes(cls, value: list[int]):
        """Validate the process numbers."""
        if not value or any(process not in DEFAULT_PROCESSES for process in value):
            raise ValueError(f"processes must be a non-empty subset of {DEFAULT_PROCESSES}")
        return value

    @field_validator("cases")
    @classmethod
    def validate_cases(cls, value: list[int]):
        """Validate the case numbers."""
        if not value or any(case not in DEFAULT_CASES for case in value):
            raise ValueError(f"cases must be a non-empty subset of {DEFAULT_CASES}")
        return value

    @field_validator("n_list")
    @classmethod
    def validate_n_list(cls, value: list[int]):
        """Validate the series lengths."""
        if not value or any(n < 4 for n in value):
            raise ValueError("n_list must be non-empty with every n >= 4")
        return value


class SizeExperiment(_Experiment):
    """Empirical size of the test under homogeneity, over a grid of block constants."""

    a_list: list[int] = Field(default_factory=lambda: [3, 9, 15])
    c_list: list[float] = Field(default_factory=lambda: [1, 1.5, 2, 2.5, 3, 4, 5, 6])

    @classmethod
    def quick(cls, **kwargs) -> "SizeExperiment":
        """Return a reduced grid for smoke runs."""
        defaults = {"a_list": [3], "n_list": [20, 50], "c_list": [2, 2.5, 3], "reps": 20, "processes": [1]}
        return cls(**{**defaults, **kwargs})


class PowerExperiment(_Experiment):
    """Power and clustering accuracy of the post-hoc procedure for two true groups."""

    effects: list[float] = Field(default_factory=lambda: [0, 0, 0, 1, 1, 1])
    c: float = Field(default=2.5, gt=0)
    noise_scale: float = Field(default=1.0, ge=0)
    """Multiplies the disturbances; 0 gives noiseless panels."""

    @field_validator("effects")
    @classmethod
    def validate_effects(cls, value: list[float]):
        """Validate that the effects define exactly two groups."""
        if len(set(value)) != 2:
            raise ValueError("effects must take exactly two distinct values")
        return value

    @property
    def a(self) -> int:
        """The number of areas."""
        return len(self.effects)

    def truth(self, labels: list[str]) -> list[frozenset[str]]:
        """Return the true clustering as label sets, lower effect first."""
        low = min(self.effects)
        return [
            frozenset(label for label, effect in zip(labels, self.effects) if effect == low),
            frozenset(label for label, effect in zip(labels, self.effects) if effect != low),
        ]

    @classmethod
    def quick(cls, **kwargs) -> "PowerExperiment":
        """Return a reduced grid for smoke runs."""
        defaults = {"n_list": [20, 50], "reps": 20, "processes": [1], "cases": [1]}
        return cls(**{**defaults, **kwargs})


class ExperimentRow(BaseModel):
    """One metric of one experiment cell."""

    process: int
    case: int
    a: int
    n: int
    c: float
    reps: int
    seed: int
    metric: str
    value: float


class ExperimentReport(BaseModel):
    """Rows of an experiment, one per cell and metric."""

    rows: list[ExperimentRow] = []

    def to_frame(self) -> pd.DataFrame:
        """Return the rows as a DataFrame with the report columns."""
        return pd.DataFrame([row.model_dump() for row in self.rows], columns=REPORT_COLUMNS)

    def to_csv(self, path: Optional[StrPath] = None) -> str:
        """Write the report as CSV, missing values as ``NA``.

        Args:
            path (StrPath, optional): The target file. The CSV text is returned either way.

        Returns:
            str: The CSV text.

        """
        buffer = io.StringIO()
        frame = self.to_frame()
        frame["value"] = [repr(float(v)) if np.isfinite(v) else "NA" for v in frame["value"]]
        frame["c"] = [repr(float(v)) for v in frame["c"]]
        frame.to_csv(buffer, index=False, lineterminator="\n")
        text = buffer.getvalue()
        if path is not None:
            Path(path).write_text(text, encoding="utf-8")
            logger.info("💾 Wrote %d report rows to %s", len(self.rows), path)
        return text

    def value(self, metric: str | PowerMetric, **keys) -> float:
        """Return the value of a metric in the unique cell matching ``keys``."""
        metric = metric.value if isinstance(metric, PowerMetric) else metric
        matches = [
            row
            for row in self.rows
            if row.metric == metric and all(getattr(row, key) == value for key, value in keys.items())
        ]
        if len(matches) != 1:
            raise KeyError(f"{len(matches)} rows match metric {metric} and {keys}")
        return matches[0].value

    def best_c(self, target: float = 0.05) -> float:
        """Return the block constant whose empirical sizes deviate least from ``target``.

        The deviation is the mean absolute difference over all other cell keys. Ties go to the
        smaller constant.

        """
        frame = self.to_frame()
        frame = frame[frame["metric"] == SIZE_METRIC]
        if frame.empty:
            raise ValueError("The report holds no empirical size rows")
        deviation = (frame["value"] - target).abs().groupby(frame["c"]).mean()
        return float(deviation.sort_index().idxmin())
