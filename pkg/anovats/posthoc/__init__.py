"""Module providing the post-hoc clustering procedure."""

__all__ = ["cluster", "split_at_largest_gap", "vanishing_alpha"]

from anovats.posthoc.cluster import cluster, split_at_largest_gap, vanishing_alpha
