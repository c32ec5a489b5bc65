"""Test suite for the panel fileio module."""

import numpy as np
import pytest

from anovats.enumerations import Layout
from anovats.exceptions import PanelError
from anovats.panel import Panel, panel_to_frame, read_csv, write_csv


def write(tmp_path, text: str, name: str = "panel.csv"):
    """Write CSV text to a temporary file."""
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return path


class TestReadLong:
    """Test suite for reading the long layout."""

    def test_groups_in_order_of_appearance(self, tmp_path):
        """Areas keep the order in which they first appear."""
        path = write(tmp_path, "area,time,value\nB,1,1.5\nB,2,2.5\nA,1,3.0\nA,2,4.0\n")
        panel = read_csv(path)

        assert panel.labels == ["B", "A"]
        assert panel.values.shape == (2, 2, 1)
        np.testing.assert_array_equal(panel.values[:, :, 0], [[1.5, 2.5], [3.0, 4.0]])

    def test_numeric_time_labels_sorted(self, tmp_path):
        """Numeric and date-like time labels are ordered chronologically."""
        path = write(tmp_path, "area,time,value\nA,10,1\nA,2,2\nB,2,3\nB,10,4\n")
        panel = read_csv(path)

        assert panel.time_index == ["2", "10"]
        np.testing.assert_array_equal(panel.values[:, :, 0], [[2.0, 1.0], [3.0, 4.0]])

    def test_text_time_labels_keep_appearance_order(self, tmp_path):
        """Non-numeric time labels keep their order of appearance."""
        path = write(tmp_path, "area,time,value\nA,Q1,1\nA,Q3,2\nA,Q2,3\nB,Q1,4\nB,Q3,5\nB,Q2,6\n")
        assert read_csv(path).time_index == ["Q1", "Q3", "Q2"]

    @pytest.mark.parametrize(
        "rows",
        [
            pytest.param("A,1,1\nA,2,NA\nB,1,3\nB,2,4\n", id="NA token"),
            pytest.param("A,1,1\nA,2,\nB,1,3\nB,2,4\n", id="empty token"),
            pytest.param("A,1,1\nB,1,3\nB,2,4\n", id="absent row"),
        ],
    )
    def test_missing_cells(self, tmp_path, rows):
        """NA, empty cells and absent rows are all missing."""
        panel = read_csv(write(tmp_path, "area,time,value\n" + rows))

        assert panel.mask[0, 1, 0]
        assert np.isnan(panel.values[0, 1, 0])
        assert not panel.is_complete

    def test_dim_column(self, tmp_path):
        """A dim column gives a multivariate panel."""
        path = write(tmp_path, "area,time,dim,value\nA,1,x,1\nA,1,y,2\nB,1,x,3\nB,1,y,4\nA,2,x,5\nA,2,y,6\nB,2,x,7\nB,2,y,8\n")
        panel = read_csv(path)

        assert panel.dim == 2
        assert panel.dim_labels == ["x", "y"]
        np.testing.assert_array_equal(panel.values[1, 1], [7.0, 8.0])

    def test_duplicate_cell(self, tmp_path):
        """Duplicate (area, time) pairs are rejected with their row number."""
        path = write(tmp_path, "area,time,value\nA,1,1.0\nA,1,2.0\nB,1,3.0\n")
        with pytest.raises(PanelError) as error:
            read_csv(path)

        assert error.value.row == 3
        assert "row 3" in str(error.value)

    @pytest.mark.parametrize(
        "token",
        [
            pytest.param("abc", id="text"),
            pytest.param("inf", id="infinite"),
            pytest.param("1,5", id="comma decimal"),
        ],
    )
    def test_bad_value(self, tmp_path, token):
        """Non-numeric and non-finite values are rejected."""
        path = write(tmp_path, f'area,time,value\nA,1,1\nB,1,"{token}"\n')
        with pytest.raises(PanelError, match="row 3"):
            read_csv(path)

    def test_bad_header(self, tmp_path):
        """An unexpected header is rejected."""
        with pytest.raises(PanelError, match="header"):
            read_csv(write(tmp_path, "group,t,y\nA,1,1\nB,1,2\n"))

    def test_single_area(self, tmp_path):
        """At least two areas are required."""
        with pytest.raises(PanelError, match="At least 2 areas"):
            read_csv(write(tmp_path, "area,time,value\nA,1,1\nA,2,2\n"))


class TestReadWide:
    """Test suite for reading the wide layout."""

    def test_time_column(self, tmp_path):
        """A leading time column holds the time labels."""
        path = write(tmp_path, "time,North,South\n2001,1.0,2.0\n2002,NA,4.0\n")
        panel = read_csv(path, Layout.WIDE)

        assert panel.labels == ["North", "South"]
        assert panel.time_index == ["2001", "2002"]
        assert panel.mask[0, 1, 0]
        assert panel.values[1, 1, 0] == 4.0

    def test_without_time_column(self, tmp_path):
        """Without a time column every column is an area."""
        panel = read_csv(write(tmp_path, "A,B,C\n1,2,3\n4,5,6\n"), "wide")

        assert panel.labels == ["A", "B", "C"]
        assert panel.time_index is None
        np.testing.assert_array_equal(panel.values[:, :, 0], [[1, 4], [2, 5], [3, 6]])


class TestWriteCsv:
    """Test suite for writing panels."""

    def test_long_output(self, tmp_path):
        """Values are written with full precision and missing cells as NA."""
        panel = Panel(values=[[0.1, np.nan], [1 / 3, 2.0]], labels=["A", "B"], time_index=["1", "2"])
        path = write_csv(panel, tmp_path / "out.csv")

        assert path.read_text(encoding="utf-8") == (
            "area,time,value\nA,1,0.1\nA,2,NA\nB,1,0.3333333333333333\nB,2,2.0\n"
        )

    def test_read_back(self, tmp_path):
        """A written panel reads back bit-exactly."""
        panel = Panel(
            values=np.random.default_rng(3).normal(size=(3, 7)),
            labels=["A", "B", "C"],
            time_index=[str(t) for t in range(1, 8)],
        )
        for layout in Layout:
            assert read_csv(write_csv(panel, tmp_path / f"{layout.value}.csv", layout), layout) == panel

    @pytest.mark.parametrize("layout", list(Layout))
    def test_read_back_unlabelled(self, tmp_path, layout):
        """A panel without time labels reads back equal to itself."""
        panel = Panel(values=np.random.default_rng(4).normal(size=(2, 4)), labels=["A", "B"])
        result = read_csv(write_csv(panel, tmp_path / "out.csv", layout), layout)

        assert result == panel
        assert result.time_labels == ["1", "2", "3", "4"]

    def test_read_back_multivariate(self, tmp_path):
        """A multivariate panel without coordinate labels reads back equal to itself."""
        panel = Panel(values=np.random.default_rng(5).normal(size=(2, 4, 2)), labels=["A", "B"])
        result = read_csv(write_csv(panel, tmp_path / "out.csv"))

        assert result == panel
        assert result.dim_labels == ["1", "2"]

    @pytest.mark.parametrize("layout", list(Layout))
    def test_read_back_keeps_time_order(self, tmp_path, layout):
        """Numeric time labels out of ascending order are not re-sorted."""
        panel = Panel(values=[[1.0, 2.0, 3.0], [4.0, 5.0, 6.0]], labels=["A", "B"], time_index=["3", "1", "2"])
        result = read_csv(write_csv(panel, tmp_path / "out.csv", layout), layout)

        assert result == panel
        assert result.time_index == ["3", "1", "2"]

    def test_wide_requires_univariate(self):
        """The wide layout cannot hold more than one coordinate."""
        panel = Panel(values=np.zeros((2, 3, 2)), labels=["A", "B"])
        with pytest.raises(PanelError, match="univariate"):
            panel_to_frame(panel, Layout.WIDE)
