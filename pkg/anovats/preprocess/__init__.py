"""Module providing the seasonal aggregation, Box-Cox and imputation steps."""

__all__ = [
    "SeasonMap",
    "aggregate_seasons",
    "BoxCoxFit",
    "boxcox_fit",
    "ARImputationModel",
    "ar_impute",
    "fit_ar",
    "PreparedPanel",
    "preprocess_panel",
]

from anovats.preprocess.boxcox import BoxCoxFit, boxcox_fit
from anovats.preprocess.impute import ARImputationModel, ar_impute, fit_ar
from anovats.preprocess.pipeline import PreparedPanel, preprocess_panel
from anovats.preprocess.seasons import SeasonMap, aggregate_seasons
