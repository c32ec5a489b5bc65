"""The homogeneity statistic and its subsample counterparts."""

__all__ = ["statistic", "subsample_statistics", "finite_population_factor"]

import logging

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

from anovats._types import FloatArray
from anovats.exceptions import InapplicableTestError
from anovats.panel.model import Panel

logger = logging.getLogger(__name__)


def _between_sum_of_squares(means: FloatArray) -> FloatArray:
    """Sum over groups of the squared deviation of each group mean from the mean of means.

    ``means`` has the group axis first and the coordinate axis last; any axes in between are
    kept.

    """
    centre = means.mean(axis=0, keepdims=True)
    # equal group means must give exactly zero
    equal = np.all(means == means[:1], axis=(0, -1), keepdims=True)
    centre = np.where(equal, means[:1], centre)
    return np.square(means - centre).sum(axis=(0, -1))


def _centred_values(panel: Panel) -> FloatArray:
    values = np.asarray(panel.values)
    if np.isnan(values).any():
        raise InapplicableTestError("The test requires a complete panel")
    if panel.num_groups < 2:
        raise InapplicableTestError(f"At least 2 groups are required, got {panel.num_groups}")
    # T_n is location invariant
    return values - values.mean(axis=(0, 1), keepdims=True)


def statistic(panel: Panel) -> tuple[float, FloatArray, FloatArray]:
    """Compute the homogeneity statistic ``T_n = n * sum_i |zbar_i - zbar|^2``.

    Args:
        panel (Panel): A complete panel with at least two groups.

    Returns:
        tuple[float, FloatArray, FloatArray]: T_n, the (a, p) group means and the p-vector
            grand mean.

    Raises:
        InapplicableTestError: If the panel has missing values or fewer than two groups.

    """
    centred = _centred_values(panel)
    group_means = np.asarray(panel.values).mean(axis=1)
    grand_mean = group_means.mean(axis=0)

    t_n = float(panel.num_times * _between_sum_of_squares(centred.mean(axis=1)))
    return t_n, group_means, grand_mean


def finite_population_factor(n: int, b: int) -> float:
    """Return the subsample scaling ``b / (1 - b / n)``."""
    return b / (1.0 - b / n)


def subsample_statistics(panel: Panel, b: int) -> FloatArray:
    """Compute the statistic on every length-``b`` window of the time axis.

    ``T_{n,b,t} = b / (1 - b/n) * sum_i |zbar_{i,b,t} - zbar_{b,t}|^2`` for
    ``t = 1, ..., n - b + 1``, where the means run over times ``t`` to ``t + b - 1``.

    Args:
        panel (Panel): A complete panel with at least two groups.
        b (int): The block length, ``2 <= b <= n - 1``.

    Returns:
        FloatArray: The ``n - b + 1`` subsample statistics in window order.

    Raises:
        InapplicableTestError: If ``b`` is out of range, or the panel is not testable.

    """
    n = panel.num_times
    if not 2 <= b <= n - 1:
        raise InapplicableTestError(f"Block length must be in [2, {n - 1}] for n={n}, got {b}")

    centred = _centred_values(panel)
    # (a, n-b+1, p, b): each window averaged directly
    windows = sliding_window_view(centred, b, axis=1)
    window_means = windows.mean(axis=-1)
    stats = finite_population_factor(n, b) * _between_sum_of_squares(window_means)

    logger.debug("Evaluated %d subsample windows of length %d", stats.shape[0], b)
    return np.asarray(stats, dtype=np.float64)
