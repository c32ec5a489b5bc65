"""Preparation of monthly survey panels for testing."""

__all__ = ["SeriesPreparation", "PreparedPanel", "preprocess_panel"]

import json
import logging
from typing import Optional, Sequence

import numpy as np
from pydantic import BaseModel, ConfigDict

from anovats.panel.model import CompletePanel, Panel
from anovats.preprocess.boxcox import LAMBDA_GRID, LAMBDA_STEP, BoxCoxFit, boxcox_fit
from anovats.preprocess.impute import DEFAULT_MAX_ORDER, ARImputationModel, ar_impute
from anovats.preprocess.seasons import aggregate_seasons

logger = logging.getLogger(__name__)


class SeriesPreparation(BaseModel):
    """The transformation and imputation model of one area series."""

    boxcox: BoxCoxFit
    ar: ARImputationModel
    imputed: int
    """Number of imputed quarters."""


class PreparedPanel(BaseModel):
    """A complete quarterly panel and the per-series fits that produced it."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    panel: CompletePanel
    series: dict[str, SeriesPreparation]

    def sidecar_json(self, indent: Optional[int] = 2) -> str:
        """Return the per-series fits as JSON."""
        payload = {key: value.model_dump(mode="json", by_alias=True) for key, value in self.series.items()}
        return json.dumps(payload, indent=indent)


def _series_key(panel: Panel, group: int, coordinate: int) -> str:
    label = panel.labels[group]
    if panel.dim == 1:
        return label
    return f"{label}:{panel.coordinate_labels[coordinate]}"


def preprocess_panel(
    monthly: Panel,
    max_order: int = DEFAULT_MAX_ORDER,
    lambda_grid: Sequence[float] = LAMBDA_GRID,
    step: float = LAMBDA_STEP,
    shift: float = 0.0,
) -> PreparedPanel:
    """Aggregate a monthly panel into quarters and impute the missing quarters.

    Every area series (and coordinate) gets its own Box-Cox fit on the observed quarters. The
    AR model is fitted and smoothed on the Box-Cox scale and the imputed values are
    back-transformed; observed quarters keep their aggregated values.

    Args:
        monthly (Panel): A panel with ``YYYY-MM`` time labels.
        max_order (int, optional): The largest AR order. Defaults to 5.
        lambda_grid (Sequence[float], optional): The Box-Cox search interval. Defaults to (-2, 2).
        step (float, optional): The Box-Cox grid step. Defaults to 0.01.
        shift (float, optional): The Box-Cox positivity shift. Defaults to 0.

    Returns:
        PreparedPanel: The complete quarterly panel and the per-series fits.

    """
    quarterly = aggregate_seasons(monthly)
    values = np.array(quarterly.values, copy=True)
    series: dict[str, SeriesPreparation] = {}

    for group in range(quarterly.num_groups):
        for coordinate in range(quarterly.dim):
            raw = values[group, :, coordinate]
            missing = np.isnan(raw)
            fit = boxcox_fit(raw, lambda_grid=lambda_grid, step=step, shift=shift)
            completed, model = ar_impute(fit.transform(raw), max_order=max_order)
            values[group, :, coordinate] = np.where(missing, fit.inverse(completed), raw)

            key = _series_key(quarterly, group, coordinate)
            series[key] = SeriesPreparation(boxcox=fit, ar=model, imputed=int(missing.sum()))
            logger.info(
                "Prepared %s: lambda=%g AR(%d), %d quarter(s) imputed",
                key,
                fit.lmbda,
                model.order,
                int(missing.sum()),
            )

    panel = CompletePanel(
        values=values,
        labels=quarterly.labels,
        time_index=quarterly.time_index,
        dim_labels=quarterly.dim_labels,
    )
    return PreparedPanel(panel=panel, series=series)
