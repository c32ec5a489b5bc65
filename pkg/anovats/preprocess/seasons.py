"""Aggregation of monthly panels into seasonal quarters."""

__all__ = ["SeasonMap", "SEASON_MAP", "aggregate_seasons"]

import logging

import numpy as np
import pandas as pd
from pydantic import BaseModel, ConfigDict, model_validator

from anovats.enumerations import Season
from anovats.exceptions import PreprocessError
from anovats.panel.model import Panel

logger = logging.getLogger(__name__)

MONTH_FORMAT = "%Y-%m"
"""Format of monthly time labels."""


class SeasonMap(BaseModel):
    """Months of each season. December belongs to the winter of the following year."""

    model_config = ConfigDict(frozen=True)

    winter: tuple[int, ...] = (12, 1, 2)
    spring: tuple[int, ...] = (3, 4, 5)
    summer: tuple[int, ...] = (6, 7, 8)
    autumn: tuple[int, ...] = (9, 10, 11)

    @model_validator(mode="after")
    def validate_partition(self) -> "SeasonMap":
        """Validate that the seasons partition the twelve months."""
        months = sorted(self.winter + self.spring + self.summer + self.autumn)
        if months != list(range(1, 13)):
            raise ValueError("Seasons must partition the months 1..12")
        return self

    def season_of(self, year: int, month: int) -> tuple[int, Season]:
        """Return the season year and season of a calendar month.

        Winter months after June count towards the next year's winter.

        """
        for season in Season:
            if month in getattr(self, season.value):
                if season is Season.WINTER and month > 6:
                    return year + 1, season
                return year, season
        raise ValueError(f"Invalid month {month}")


SEASON_MAP = SeasonMap()


def season_label(year: int, season: Season) -> str:
    """Return the quarterly time label, e.g. ``2019-winter``."""
    return f"{year}-{season.value}"


def _parse_months(time_index: list[str] | None) -> pd.DatetimeIndex:
    if time_index is None:
        raise PreprocessError("Seasonal aggregation requires a monthly time index")
    try:
        return pd.DatetimeIndex(pd.to_datetime(time_index, format=MONTH_FORMAT))
    except (ValueError, TypeError) as exc:
        raise PreprocessError(f"Time labels must be year-month (YYYY-MM): {exc}") from exc


def aggregate_seasons(monthly: Panel, season_map: SeasonMap = SEASON_MAP) -> Panel:
    """Average a monthly panel into seasonal quarters.

    Each season is the mean of its observed months and is missing when all of them are. The
    quarters emitted are the four seasons of every calendar year present in the index, so the
    December of the last year is not used.

    Args:
        monthly (Panel): A panel whose time labels are ``YYYY-MM``.
        season_map (SeasonMap, optional): The season definitions. Defaults to SEASON_MAP.

    Returns:
        Panel: The quarterly panel, labelled ``YYYY-season`` in chronological order.

    Raises:
        PreprocessError: If the time labels carry no month information.

    """
    months = _parse_months(monthly.time_index)
    years = range(int(months.year.min()), int(months.year.max()) + 1)
    quarters = [(year, season) for year in years for season in Season]
    slot = {quarter: i for i, quarter in enumerate(quarters)}

    # (quarters, months) indicator of membership
    weights = np.zeros((len(quarters), len(months)))
    for column, (year, month) in enumerate(zip(months.year, months.month)):
        quarter = season_map.season_of(int(year), int(month))
        if quarter in slot:
            weights[slot[quarter], column] = 1.0

    observed = ~monthly.mask
    sums = np.einsum("qt,atd->aqd", weights, np.where(observed, monthly.values, 0.0))
    counts = np.einsum("qt,atd->aqd", weights, observed.astype(np.float64))
    with np.errstate(invalid="ignore", divide="ignore"):
        values = np.where(counts > 0, sums / np.maximum(counts, 1.0), np.nan)

    logger.info("Aggregated %d months into %d quarters", monthly.num_times, len(quarters))
    return Panel(
        values=values,
        labels=monthly.labels,
        time_index=[season_label(year, season) for year, season in quarters],
        dim_labels=monthly.dim_labels,
    )
