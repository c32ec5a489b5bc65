"""Module providing the subsampling homogeneity test."""

__all__ = [
    "BlockRule",
    "block_length",
    "small_n_guarantee",
    "statistic",
    "subsample_statistics",
    "p_value",
    "quantile_decision",
    "homogeneity_test",
]

from anovats.core.block import BlockRule, block_length, small_n_guarantee
from anovats.core.decision import homogeneity_test, p_value, quantile_decision
from anovats.core.statistic import statistic, subsample_statistics
