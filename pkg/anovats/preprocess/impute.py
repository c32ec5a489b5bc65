"""Imputation of missing values with an autoregressive state-space smoother."""

__all__ = ["ARImputationModel", "fit_ar", "ar_impute", "DEFAULT_MAX_ORDER"]

import logging
import warnings
from typing import Optional, Sequence

import numpy as np
from pydantic import BaseModel, ConfigDict, Field
from scipy.linalg import solve_toeplitz
from statsmodels.tsa.statespace.sarimax import SARIMAX

from anovats._types import FloatArray
from anovats.exceptions import NonStationaryError, PreprocessError

logger = logging.getLogger(__name__)

DEFAULT_MAX_ORDER = 5
MIN_OBSERVED = 10


class ARImputationModel(BaseModel):
    """A zero-mean AR(k) model around ``mean``, ``x_t - mean = sum_j phi_j (x_{t-j} - mean) + e_t``."""

    model_config = ConfigDict(frozen=True)

    order: int = Field(ge=1)
    coefficients: list[float]
    innovation_variance: float = Field(gt=0)
    mean: float
    aic: Optional[float] = None

    def spectral_radius(self) -> float:
        """Return the spectral radius of the companion matrix."""
        companion = np.zeros((self.order, self.order))
        companion[0, :] = self.coefficients
        companion[1:, :-1] = np.eye(self.order - 1)
        return float(np.max(np.abs(np.linalg.eigvals(companion))))


def _autocovariances(centred: FloatArray, max_lag: int) -> FloatArray:
    """Autocovariances over the observed pairs, divided by the number of observed points."""
    observed = ~np.isnan(centred)
    filled = np.where(observed, centred, 0.0)
    total = observed.sum()
    return np.array([np.dot(filled[: filled.size - lag], filled[lag:]) / total for lag in range(max_lag + 1)])


def _missing_run_lengths(missing: np.ndarray) -> tuple[int, int]:
    leading = int(np.argmin(missing)) if not missing.all() else missing.size
    trailing = int(np.argmin(missing[::-1])) if not missing.all() else missing.size
    return leading, trailing


def fit_ar(series: FloatArray | Sequence[float], max_order: int = DEFAULT_MAX_ORDER) -> ARImputationModel:
    """Fit an AR model by Yule-Walker, selecting the order by AIC.

    Args:
        series (FloatArray | Sequence[float]): The series, NaN where missing.
        max_order (int, optional): The largest order considered. Defaults to 5.

    Returns:
        ARImputationModel: The fitted model.

    Raises:
        PreprocessError: If fewer than ``max(10, 3 * max_order)`` values are observed.
        NonStationaryError: If the selected model is not stationary.

    """
    values = np.asarray(series, dtype=np.float64)
    observed = ~np.isnan(values)
    n_obs = int(observed.sum())
    required = max(MIN_OBSERVED, 3 * max_order)
    if n_obs < required:
        raise PreprocessError(f"AR imputation needs at least {required} observed values, got {n_obs}")

    mean = float(values[observed].mean())
    gamma = _autocovariances(values - mean, max_order)
    if gamma[0] <= 0:
        raise PreprocessError("AR imputation needs a non-constant series")

    best: Optional[ARImputationModel] = None
    for order in range(1, max_order + 1):
        phi = solve_toeplitz(gamma[:order], gamma[1 : order + 1])
        sigma2 = float(gamma[0] - np.dot(phi, gamma[1 : order + 1]))
        if sigma2 <= 0:
            logger.debug("AR(%d): non-positive innovation variance, skipped", order)
            continue
        aic = n_obs * np.log(sigma2) + 2 * order
        logger.debug("AR(%d): sigma2=%g aic=%g", order, sigma2, aic)
        if best is None or aic < best.aic:  # type: ignore[operator]
            best = ARImputationModel(
                order=order,
                coefficients=phi.tolist(),
                innovation_variance=sigma2,
                mean=mean,
                aic=float(aic),
            )

    if best is None:
        raise PreprocessError("No AR order gave a positive innovation variance")
    radius = best.spectral_radius()
    if radius >= 1:
        raise NonStationaryError(
            f"AR({best.order}) fit is not stationary (spectral radius {radius:.4g}); difference the series first"
        )
    return best


def ar_impute(
    series: FloatArray | Sequence[float],
    max_order: int = DEFAULT_MAX_ORDER,
    model: Optional[ARImputationModel] = None,
) -> tuple[FloatArray, ARImputationModel]:
    """Replace missing values by their smoothed conditional means under an AR model.

    The AR model is cast in state-space form and run through the fixed-interval smoother;
    observed values are returned unchanged.

    Args:
        series (FloatArray | Sequence[float]): The series, NaN where missing.
        max_order (int, optional): The largest AR order considered. Defaults to 5.
        model (ARImputationModel, optional): A model to use instead of fitting one.

    Returns:
        tuple[FloatArray, ARImputationModel]: The completed series and the model used.

    Raises:
        PreprocessError: If the series is too short or both its ends are missing over more than
            ``max_order`` points.
        NonStationaryError: If the fitted or supplied model is not stationary.

    """
    values = np.asarray(series, dtype=np.float64)
    missing = np.isnan(values)
    if model is None:
        model = fit_ar(values, max_order)
    elif model.spectral_radius() >= 1:
        raise NonStationaryError(f"Supplied AR({model.order}) model is not stationary")

    if not missing.any():
        return values.copy(), model

    leading, trailing = _missing_run_lengths(missing)
    if leading > max_order and trailing > max_order:
        raise PreprocessError(
            f"Both ends of the series are missing over more than {max_order} points ({leading} and {trailing})"
        )

    state_space = SARIMAX(values - model.mean, order=(model.order, 0, 0), trend="n")
    params = np.r_[model.coefficients, model.innovation_variance]
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        smoothed = state_space.smooth(params).smoothed_state[0]

    completed = np.where(missing, model.mean + smoothed, values)
    logger.debug("Imputed %d of %d values with AR(%d)", int(missing.sum()), values.size, model.order)
    return completed, model
