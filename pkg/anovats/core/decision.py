"""Subsampling p-value and the test decision."""

__all__ = ["p_value", "quantile_decision", "homogeneity_test"]

import logging
from typing import Optional, Sequence

import numpy as np

from anovats.core.block import BlockRule, block_length
from anovats.core.statistic import statistic, subsample_statistics
from anovats.model.result import TestResult
from anovats.panel.model import Panel

logger = logging.getLogger(__name__)

DEFAULT_ALPHA = 0.05


def _validate_alpha(alpha: float) -> None:
    if not 0 < alpha < 1:
        raise ValueError(f"alpha must be in (0, 1), got {alpha}")


def p_value(t_n: float, subsample_stats: Sequence[float] | np.ndarray) -> float:
    """Return the fraction of subsample statistics strictly greater than ``t_n``.

    Args:
        t_n (float): The full-sample statistic.
        subsample_stats (Sequence[float] | np.ndarray): The subsample statistics.

    Returns:
        float: The p-value, a multiple of ``1 / len(subsample_stats)``.

    Raises:
        ValueError: If no subsample statistics are given.

    """
    stats = np.asarray(subsample_stats, dtype=np.float64)
    if stats.size == 0:
        raise ValueError("At least one subsample statistic is required")
    return int(np.count_nonzero(stats > t_n)) / stats.size


def quantile_decision(t_n: float, subsample_stats: Sequence[float] | np.ndarray, alpha: float) -> bool:
    """Decide by comparing ``t_n`` with the empirical ``(1 - alpha)``-quantile of the subsample statistics.

    The quantile is ``inf{x : F(x) > 1 - alpha}`` with ``F`` the right-continuous empirical CDF,
    and the null hypothesis is rejected when ``t_n`` is at least the quantile. The condition
    ``F(x) > 1 - alpha`` is evaluated as ``(m - m F(x)) / m < alpha`` so that it rounds exactly
    like the p-value form.

    Args:
        t_n (float): The full-sample statistic.
        subsample_stats (Sequence[float] | np.ndarray): The subsample statistics.
        alpha (float): The significance level.

    Returns:
        bool: True to reject homogeneity.

    """
    stats = np.sort(np.asarray(subsample_stats, dtype=np.float64))
    if stats.size == 0:
        raise ValueError("At least one subsample statistic is required")
    m = stats.size

    at_or_below = np.searchsorted(stats, stats, side="right")
    above_fraction = (m - at_or_below) / m
    candidates = np.flatnonzero(above_fraction < alpha)
    if candidates.size == 0:
        return False
    quantile = stats[candidates[0]]
    return bool(t_n >= quantile)


def homogeneity_test(
    panel: Panel,
    rule: Optional[BlockRule] = None,
    alpha: float = DEFAULT_ALPHA,
) -> TestResult:
    """Test the hypothesis that all groups share the same mean.

    Args:
        panel (Panel): The panel. It must be complete and hold at least two groups.
        rule (BlockRule, optional): The block rule. Defaults to ``BlockRule()``.
        alpha (float, optional): The significance level. Defaults to 0.05.

    Returns:
        TestResult: The statistic, subsample statistics, p-value and decision.

    Raises:
        PanelError: If the panel has missing values.
        InapplicableTestError: If the panel has fewer than two groups or three time points.

    """
    _validate_alpha(alpha)
    complete = panel.require_complete()
    b = block_length(complete.num_times, rule)

    t_n, group_means, grand_mean = statistic(complete)
    stats = subsample_statistics(complete, b)
    p = p_value(t_n, stats)

    logger.debug(
        "Tested %d groups over n=%d with b=%d: T_n=%g p=%g",
        complete.num_groups,
        complete.num_times,
        b,
        t_n,
        p,
    )
    return TestResult(
        statistic=t_n,
        b=b,
        p_value=p,
        alpha=alpha,
        reject=p < alpha,
        group_means=group_means.tolist(),
        subsample_stats=stats.tolist(),
        grand_mean=grand_mean.tolist(),
        labels=list(complete.labels),
    )
