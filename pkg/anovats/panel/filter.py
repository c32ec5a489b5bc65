"""Sub-module for filtering panels by group completeness and time range."""

__all__ = ["drop_incomplete_groups", "restrict_time"]

import logging

from anovats.exceptions import InapplicableTestError, PanelError
from anovats.panel.model import Panel

logger = logging.getLogger(__name__)
"""Logger for the filter module."""


def drop_incomplete_groups(panel: Panel, max_missing_fraction: float) -> Panel:
    """Drop the groups whose fraction of missing cells exceeds a threshold.

    Args:
        panel (Panel): The panel to filter.
        max_missing_fraction (float): The largest missing fraction a retained group may have.

    Returns:
        Panel: The panel restricted to the retained groups, in their original order.

    Raises:
        ValueError: If the threshold is outside [0, 1].
        InapplicableTestError: If fewer than two groups are retained.

    """
    if not 0 <= max_missing_fraction <= 1:
        raise ValueError(f"max_missing_fraction must be in [0, 1], got {max_missing_fraction}")

    fractions = panel.missing_fraction()
    keep = [label for label, fraction in zip(panel.labels, fractions) if fraction <= max_missing_fraction]
    dropped = [label for label in panel.labels if label not in keep]

    for label in dropped:
        logger.info(
            "Dropping area %s with %.1f%% missing",
            label,
            100 * fractions[panel.labels.index(label)],
        )

    if len(keep) < 2:
        raise InapplicableTestError(
            f"Only {len(keep)} area(s) have at most {max_missing_fraction:g} missing; at least 2 are required"
        )
    if not dropped:
        return panel
    return panel.select_groups(keep)


def restrict_time(panel: Panel, start: str, stop: str) -> Panel:
    """Restrict a panel to the time labels ``start`` to ``stop``, both inclusive.

    Args:
        panel (Panel): The panel to restrict.
        start (str): The first time label kept.
        stop (str): The last time label kept.

    Returns:
        Panel: The sliced panel.

    Raises:
        PanelError: If the panel has no time index, a label is unknown or ``start`` comes
            after ``stop``.

    """
    if panel.time_index is None:
        raise PanelError("Panel has no time index to restrict")

    for label in (start, stop):
        if label not in panel.time_index:
            raise PanelError(f"Unknown time label {label!r}")

    first = panel.time_index.index(start)
    last = panel.time_index.index(stop)
    if first > last:
        raise PanelError(f"Time label {start!r} comes after {stop!r}")

    if first == 0 and last == panel.num_times - 1:
        return panel

    logger.info("Restricting panel to %s..%s (%d time points)", start, stop, last - first + 1)
    return panel.select_times(first, last + 1)
