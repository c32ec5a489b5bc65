"""Data model for grouped time-series panels."""

import logging
from typing import Any, Iterable, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, ValidationInfo, field_validator, model_validator

from anovats._types import BoolArray, FloatArray
from anovats.exceptions import PanelError

logger = logging.getLogger(__name__)


def default_labels(count: int) -> list[str]:
    """Return the labels ``1`` to ``count`` used when a panel axis carries none."""
    return [str(position + 1) for position in range(count)]


def _freeze(array: np.ndarray) -> np.ndarray:
    array = np.array(array, copy=True)
    array.setflags(write=False)
    return array


class Panel(BaseModel):
    """A panel of `a` groups observed over `n` time points in `p` coordinates.

    Values are indexed as ``values[group, time, coordinate]``. Positions flagged in
    ``missing_mask`` hold NaN; every other position is finite. Instances are immutable.

    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    values: np.ndarray
    """Observations, shape (a, n, p)."""
    labels: list[str]
    """Group names in data order."""
    time_index: Optional[list[str]] = None
    """Optional labels of the n time points."""
    missing_mask: Optional[np.ndarray] = None
    """True where an observation is missing. Defaults to the NaN positions of ``values``."""
    dim_labels: Optional[list[str]] = None
    """Optional names of the p coordinates."""

    @field_validator("values", mode="before")
    @classmethod
    def validate_values(cls, value: Any, info: ValidationInfo):  # pylint: disable=unused-argument
        """Coerce the values to a 3-d double precision array.

        One dimensional input is read as a single series, two dimensional input as (a, n).

        """
        array = np.asarray(value, dtype=np.float64)
        if array.ndim == 2:
            array = array[:, :, np.newaxis]
        if array.ndim != 3:
            raise ValueError(f"Panel values must be 2 or 3 dimensional, got {array.ndim}")
        return array

    @field_validator("missing_mask", mode="before")
    @classmethod
    def validate_missing_mask(cls, value: Any, info: ValidationInfo):  # pylint: disable=unused-argument
        """Coerce the missing mask to a boolean array of the same layout as the values."""
        if value is None:
            return value
        mask = np.asarray(value, dtype=bool)
        if mask.ndim == 2:
            mask = mask[:, :, np.newaxis]
        return mask

    @field_validator("labels")
    @classmethod
    def validate_labels(cls, value: list[str], info: ValidationInfo):  # pylint: disable=unused-argument
        """Validate that group labels are unique and non-empty."""
        if any(not label for label in value):
            raise ValueError("Group labels must be non-empty")
        if len(set(value)) != len(value):
            raise ValueError("Group labels must be unique")
        return value

    @model_validator(mode="after")
    def validate_shape(self) -> "Panel":
        """Validate the array shapes and the finiteness of observed values."""
        values = self.values
        if values.shape[0] != len(self.labels):
            raise ValueError(f"{len(self.labels)} labels given for {values.shape[0]} groups")
        if self.time_index is not None and len(self.time_index) != values.shape[1]:
            raise ValueError(f"{len(self.time_index)} time labels given for {values.shape[1]} time points")
        if self.dim_labels is not None and len(self.dim_labels) != values.shape[2]:
            raise ValueError(f"{len(self.dim_labels)} dim labels given for {values.shape[2]} coordinates")

        mask = np.isnan(values) if self.missing_mask is None else np.asarray(self.missing_mask, dtype=bool)
        if mask.shape != values.shape:
            raise ValueError(f"Missing mask shape {mask.shape} does not match values {values.shape}")
        if not np.all(np.isfinite(values[~mask])):
            raise ValueError("Observed values must be finite")

        values = np.where(mask, np.nan, values)
        # frozen model, bypass the assignment guard
        object.__setattr__(self, "values", _freeze(values))
        object.__setattr__(self, "missing_mask", _freeze(mask))
        return self

    @property
    def num_groups(self) -> int:
        """The number of groups, a."""
        return self.values.shape[0]

    @property
    def num_times(self) -> int:
        """The number of time points, n."""
        return self.values.shape[1]

    @property
    def dim(self) -> int:
        """The number of coordinates, p."""
        return self.values.shape[2]

    @property
    def time_labels(self) -> list[str]:
        """The time labels, ``1`` to ``n`` when the panel has none."""
        return self.time_index if self.time_index is not None else default_labels(self.num_times)

    @property
    def coordinate_labels(self) -> list[str]:
        """The coordinate labels, ``1`` to ``p`` when the panel has none."""
        return self.dim_labels if self.dim_labels is not None else default_labels(self.dim)

    @property
    def mask(self) -> BoolArray:
        """The missing mask (never None after validation)."""
        assert self.missing_mask is not None
        return self.missing_mask

    @property
    def is_complete(self) -> bool:
        """Whether the panel has no missing observations."""
        return not bool(self.mask.any())

    def missing_fraction(self) -> FloatArray:
        """Return the fraction of missing cells per group."""
        return self.mask.reshape(self.num_groups, -1).mean(axis=1)

    def require_complete(self) -> "CompletePanel":
        """Return this panel as a complete panel.

        Returns:
            CompletePanel: The validated complete panel.

        Raises:
            PanelError: If any observation is missing.

        """
        if isinstance(self, CompletePanel):
            return self
        if not self.is_complete:
            incomplete = [label for label, frac in zip(self.labels, self.missing_fraction()) if frac > 0]
            raise PanelError(
                f"Panel has missing values in {', '.join(incomplete)}; drop or impute them before testing"
            )
        return CompletePanel(
            values=self.values,
            labels=self.labels,
            time_index=self.time_index,
            dim_labels=self.dim_labels,
        )

    def select_groups(self, labels: Iterable[str]) -> "Panel":
        """Return the panel restricted to the given groups, in the given order.

        Args:
            labels (Iterable[str]): The group labels to keep.

        Returns:
            Panel: The sub-panel, of the same type as this panel.

        """
        labels = list(labels)
        try:
            index = [self.labels.index(label) for label in labels]
        except ValueError as exc:
            raise PanelError(f"Unknown group label: {exc}") from exc
        return self.__class__(
            values=self.values[index],
            labels=labels,
            time_index=self.time_index,
            missing_mask=self.mask[index],
            dim_labels=self.dim_labels,
        )

    def select_times(self, start: int, stop: int) -> "Panel":
        """Return the panel restricted to the time positions ``start:stop``."""
        return self.__class__(
            values=self.values[:, start:stop],
            labels=self.labels,
            time_index=None if self.time_index is None else self.time_index[start:stop],
            missing_mask=self.mask[:, start:stop],
            dim_labels=self.dim_labels,
        )

    def with_values(self, values: FloatArray) -> "Panel":
        """Return a panel with the same labels and new values."""
        return self.__class__(
            values=values,
            labels=self.labels,
            time_index=self.time_index,
            dim_labels=self.dim_labels,
        )

    def __eq__(self, other: object) -> bool:
        """Compare labels, mask and observed values bit-exactly.

        Absent time or coordinate labels compare equal to their defaults.

        """
        if not isinstance(other, Panel):
            return NotImplemented
        return (
            self.labels == other.labels
            and self.time_labels == other.time_labels
            and self.coordinate_labels == other.coordinate_labels
            and self.values.shape == other.values.shape
            and bool(np.array_equal(self.mask, other.mask))
            and bool(np.array_equal(self.values, other.values, equal_nan=True))
        )

    def __hash__(self) -> int:
        return hash((tuple(self.labels), self.values.shape))


class CompletePanel(Panel):
    """A panel without missing observations."""

    @model_validator(mode="after")
    def validate_complete(self) -> "CompletePanel":
        """Validate that no observation is missing."""
        mask = self.missing_mask if self.missing_mask is not None else np.isnan(self.values)
        if mask.any():
            raise ValueError("A complete panel cannot contain missing values")
        return self
