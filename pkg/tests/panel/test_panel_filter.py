"""Test suite for the panel filter module."""

import numpy as np
import pytest

from anovats.exceptions import InapplicableTestError, PanelError
from anovats.panel import Panel, drop_incomplete_groups, restrict_time


@pytest.fixture
def gappy_panel() -> Panel:
    """Four areas with 0, 1, 2 and 3 missing of 4 time points."""
    nan = np.nan
    return Panel(
        values=[
            [1.0, 2.0, 3.0, 4.0],
            [1.0, nan, 3.0, 4.0],
            [nan, nan, 3.0, 4.0],
            [nan, nan, nan, 4.0],
        ],
        labels=["A", "B", "C", "D"],
        time_index=["2001", "2002", "2003", "2004"],
    )


class TestDropIncompleteGroups:
    """Test suite for the `drop_incomplete_groups` function."""

    @pytest.mark.parametrize(
        "threshold, expected",
        [
            pytest.param(0.25, ["A", "B"], id="quarter"),
            pytest.param(0.5, ["A", "B", "C"], id="half"),
            pytest.param(1.0, ["A", "B", "C", "D"], id="all"),
        ],
    )
    def test_threshold(self, gappy_panel, threshold, expected):
        """Groups above the threshold are dropped, the rest keep their order."""
        assert drop_incomplete_groups(gappy_panel, threshold).labels == expected

    def test_nothing_dropped_returns_same_panel(self, gappy_panel):
        """The panel is returned unchanged when every group passes."""
        assert drop_incomplete_groups(gappy_panel, 1.0) is gappy_panel

    @pytest.mark.parametrize("threshold", [0.25, 0.5, 1.0])
    def test_idempotent(self, gappy_panel, threshold):
        """Dropping twice with one threshold equals dropping once."""
        once = drop_incomplete_groups(gappy_panel, threshold)
        assert drop_incomplete_groups(once, threshold) == once

    def test_too_few_groups(self, gappy_panel):
        """Fewer than two retained groups make the test inapplicable."""
        with pytest.raises(InapplicableTestError):
            drop_incomplete_groups(gappy_panel, 0.0)

    def test_invalid_threshold(self, gappy_panel):
        """The threshold must be a fraction."""
        with pytest.raises(ValueError):
            drop_incomplete_groups(gappy_panel, 1.5)


class TestRestrictTime:
    """Test suite for the `restrict_time` function."""

    def test_inclusive_range(self, gappy_panel):
        """Both ends of the range are kept."""
        panel = restrict_time(gappy_panel, "2003", "2004")

        assert panel.time_index == ["2003", "2004"]
        assert panel.is_complete

    def test_full_range_is_identity(self, gappy_panel):
        """Restricting to the full range returns the panel unchanged."""
        assert restrict_time(gappy_panel, "2001", "2004") is gappy_panel

    def test_composition(self, gappy_panel):
        """Nested restrictions equal the restriction to the inner range."""
        outer = restrict_time(gappy_panel, "2001", "2003")

        assert restrict_time(outer, "2002", "2003") == restrict_time(gappy_panel, "2002", "2003")

    @pytest.mark.parametrize(
        "start, stop",
        [
            pytest.param("2000", "2003", id="unknown start"),
            pytest.param("2002", "2009", id="unknown stop"),
            pytest.param("2004", "2002", id="reversed"),
        ],
    )
    def test_invalid_range(self, gappy_panel, start, stop):
        """Unknown or reversed labels are rejected."""
        with pytest.raises(PanelError):
            restrict_time(gappy_panel, start, stop)

    def test_requires_time_index(self):
        """A panel without time labels cannot be restricted."""
        panel = Panel(values=np.zeros((2, 3)), labels=["A", "B"])
        with pytest.raises(PanelError, match="time index"):
            restrict_time(panel, "1", "2")
