"""Box-Cox transformation fitted by profile likelihood over a grid of lambdas."""

__all__ = ["BoxCoxFit", "boxcox_fit", "LAMBDA_GRID", "LAMBDA_STEP"]

import logging
from typing import Sequence

import numpy as np
from pydantic import BaseModel, ConfigDict, Field
from scipy import special, stats

from anovats._types import FloatArray
from anovats.exceptions import PreprocessError

logger = logging.getLogger(__name__)

LAMBDA_GRID = (-2.0, 2.0)
"""Default search interval of lambda."""
LAMBDA_STEP = 0.01
"""Default grid step."""


class BoxCoxFit(BaseModel):
    """A fitted Box-Cox transformation ``((x + shift) ** lmbda - 1) / lmbda``, or ``log(x + shift)`` at 0."""

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    lmbda: float = Field(alias="lambda")
    shift: float = Field(default=0.0, ge=0)
    loglik: float

    def transform(self, values: FloatArray) -> FloatArray:
        """Transform values; NaN stays NaN."""
        shifted = np.asarray(values, dtype=np.float64) + self.shift
        if self.lmbda == 0:
            return np.log(shifted)
        return special.boxcox(shifted, self.lmbda)

    def inverse(self, values: FloatArray) -> FloatArray:
        """Map transformed values back to the original scale."""
        return special.inv_boxcox(np.asarray(values, dtype=np.float64), self.lmbda) - self.shift


def _lambda_grid(bounds: Sequence[float], step: float) -> FloatArray:
    low, high = bounds
    if not low < high or step <= 0:
        raise ValueError(f"Invalid lambda grid {bounds} with step {step}")
    count = int(round((high - low) / step)) + 1
    # rounding puts lambda = 0 exactly on the grid
    return np.round(np.linspace(low, high, count), 10)


def boxcox_fit(
    series: FloatArray | Sequence[float],
    lambda_grid: Sequence[float] = LAMBDA_GRID,
    step: float = LAMBDA_STEP,
    shift: float = 0.0,
) -> BoxCoxFit:
    """Fit the Box-Cox lambda maximising the Gaussian profile log-likelihood.

    The log-likelihood includes the Jacobian term ``(lambda - 1) * sum(log x)``. Missing (NaN)
    values are ignored.

    Args:
        series (FloatArray | Sequence[float]): The series.
        lambda_grid (Sequence[float], optional): The search interval. Defaults to (-2, 2).
        step (float, optional): The grid step. Defaults to 0.01.
        shift (float, optional): A constant added before transforming. Defaults to 0.

    Returns:
        BoxCoxFit: The fitted transformation.

    Raises:
        PreprocessError: If a shifted observed value is not positive, or fewer than two distinct
            values are observed.

    """
    values = np.asarray(series, dtype=np.float64)
    observed = values[~np.isnan(values)] + shift
    if np.any(observed <= 0):
        raise PreprocessError(
            f"Box-Cox requires positive values; the minimum is {observed.min():g}, pass a shift larger than "
            f"{-observed.min() + shift:g}"
        )
    if np.unique(observed).size < 2:
        raise PreprocessError("Box-Cox requires at least two distinct observed values")

    grid = _lambda_grid(lambda_grid, step)
    loglik = np.array([stats.boxcox_llf(lmbda, observed) for lmbda in grid])
    best = int(np.nanargmax(loglik))

    logger.debug("Box-Cox lambda %g (loglik %g) over %d grid points", grid[best], loglik[best], grid.size)
    return BoxCoxFit(lmbda=float(grid[best]), shift=shift, loglik=float(loglik[best]))
