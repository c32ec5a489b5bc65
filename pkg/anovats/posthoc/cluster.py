"""Recursive post-hoc division of areas into homogeneous groups.

After the homogeneity test rejects, the areas are sorted by sample mean and split where the gap
between adjacent means is largest. Each side is tested again, and the procedure recurses until a
group is not rejected or holds a single area.
"""

__all__ = ["split_at_largest_gap", "cluster", "vanishing_alpha"]

import logging
from typing import Optional, Sequence

import numpy as np

from anovats._types import AlphaSchedule
from anovats.core.block import BlockRule
from anovats.core.decision import DEFAULT_ALPHA, homogeneity_test
from anovats.exceptions import InapplicableTestError
from anovats.model.result import ClusterNode, ClusterResult, TraceEntry
from anovats.panel.model import Panel

logger = logging.getLogger(__name__)
"""Logger for the cluster module."""


def split_at_largest_gap(labels: Sequence[str], means: Sequence[float]) -> tuple[int, list[str], list[str]]:
    """Split labels at the largest gap between adjacent sorted means.

    Sorting is stable, so equal means keep their input order. Among equal largest gaps the
    first one is used.

    Args:
        labels (Sequence[str]): The area labels.
        means (Sequence[float]): The matching sample means.

    Returns:
        tuple[int, list[str], list[str]]: The split index ``i`` (the number of members on the
            left), the left labels and the right labels, both in ascending mean order.

    Raises:
        ValueError: If fewer than two labels are given or the lengths differ.

    """
    if len(labels) != len(means):
        raise ValueError(f"{len(labels)} labels given for {len(means)} means")
    if len(labels) < 2:
        raise ValueError("At least 2 members are required to split")

    order = np.argsort(np.asarray(means, dtype=np.float64), kind="stable")
    sorted_means = np.asarray(means, dtype=np.float64)[order]
    sorted_labels = [labels[i] for i in order]

    gaps = np.diff(sorted_means)
    split = int(np.argmax(gaps)) + 1
    logger.debug("Largest gap %g after %s", gaps[split - 1], sorted_labels[split - 1])
    return split, sorted_labels[:split], sorted_labels[split:]


def vanishing_alpha(alpha0: float, rate: float) -> AlphaSchedule:
    """Return a significance schedule decreasing with the series length, ``alpha0 * n ** -rate``.

    Args:
        alpha0 (float): The level at ``n = 1``.
        rate (float): The decay exponent, non-negative.

    Returns:
        AlphaSchedule: A callable ``(depth, node_size, n) -> alpha``.

    """
    if not 0 < alpha0 < 1:
        raise ValueError(f"alpha0 must be in (0, 1), got {alpha0}")
    if rate < 0:
        raise ValueError(f"rate must be non-negative, got {rate}")

    def schedule(depth: int, node_size: int, n: int) -> float:  # pylint: disable=unused-argument
        return alpha0 * n ** (-rate)

    return schedule


class _Clusterer:
    """Depth-first walk of the post-hoc procedure over one panel."""

    def __init__(self, panel: Panel, rule: Optional[BlockRule], alpha: float | AlphaSchedule):
        self.panel = panel
        self.rule = rule
        self.alpha = alpha
        self.trace: list[TraceEntry] = []
        means = np.asarray(panel.values).mean(axis=1)[:, 0]
        self.means = dict(zip(panel.labels, means.tolist()))

    def level(self, depth: int, size: int) -> float:
        if callable(self.alpha):
            return float(self.alpha(depth, size, self.panel.num_times))
        return self.alpha

    def visit(self, members: list[str], depth: int) -> ClusterNode:
        order = np.argsort([self.means[label] for label in members], kind="stable")
        members = [members[i] for i in order]
        sample_means = [self.means[label] for label in members]

        if len(members) == 1:
            return ClusterNode(members=members, sample_means=sample_means)

        alpha = self.level(depth, len(members))
        result = homogeneity_test(self.panel.select_groups(members), self.rule, alpha)
        self.trace.append(
            TraceEntry(members=members, p_value=result.p_value, alpha=alpha, reject=result.reject, depth=depth)
        )
        logger.debug("Depth %d {%s}: p=%g", depth, ", ".join(members), result.p_value)

        if not result.reject:
            return ClusterNode(members=members, sample_means=sample_means, p_value=result.p_value)

        split, left, right = split_at_largest_gap(members, sample_means)
        return ClusterNode(
            members=members,
            sample_means=sample_means,
            p_value=result.p_value,
            split_index=split,
            children=(self.visit(left, depth + 1), self.visit(right, depth + 1)),
        )


def cluster(
    panel: Panel,
    rule: Optional[BlockRule] = None,
    alpha: float | AlphaSchedule = DEFAULT_ALPHA,
) -> ClusterResult:
    """Divide the areas of a univariate panel into statistically homogeneous groups.

    Every node is tested over the full time range, so the block length is the same at every
    node.

    Args:
        panel (Panel): A complete panel with ``p = 1`` and at least two areas.
        rule (BlockRule, optional): The block rule. Defaults to ``BlockRule()``.
        alpha (float | AlphaSchedule, optional): The significance level, or a callable
            ``(depth, node_size, n) -> alpha`` evaluated at every tested node. Defaults to 0.05.

    Returns:
        ClusterResult: The tree, the final groups with their pooled means and the test trace.

    Raises:
        InapplicableTestError: If ``p != 1`` or there are fewer than two areas.

    """
    if panel.dim != 1:
        raise InapplicableTestError(f"The post-hoc procedure requires p = 1, got p = {panel.dim}")
    if panel.num_groups < 2:
        raise InapplicableTestError(f"At least 2 areas are required, got {panel.num_groups}")
    complete = panel.require_complete()

    clusterer = _Clusterer(complete, rule, alpha)
    root = clusterer.visit(list(complete.labels), depth=0)

    leaves = root.leaves()
    final_groups = [leaf.members for leaf in leaves]
    group_means = [float(np.mean(leaf.sample_means)) for leaf in leaves]
    logger.info("Post-hoc procedure found %d group(s) in %d test(s)", len(final_groups), len(clusterer.trace))

    return ClusterResult(
        root=root,
        final_groups=final_groups,
        group_means=group_means,
        alpha=None if callable(alpha) else float(alpha),
        trace=clusterer.trace,
    )
