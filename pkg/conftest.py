"""Pytest fixtures and plugins."""

import os
from pathlib import Path

import numpy as np
import pytest

from anovats.panel import CompletePanel, Panel

IMR_DATA_ENV = "ANOVATS_IMR_DATA"
"""Directory holding the optional survey CSVs used by tests marked ``local``."""


# region panels


def demo_values() -> np.ndarray:
    """Return a 4 x 20 panel with groups (Area_1), (Area_3, Area_2), (Area_4).

    Area_2 and Area_3 differ by a step pattern with zero mean, so only the window statistics see
    a difference between them.
    """
    t = np.arange(20)
    common = 0.25 * (t % 3)
    step = np.where(t < 10, 1.0, -1.0)
    return np.stack(
        [
            common,
            10.0 + common + step,
            9.9 + common - step,
            20.0 + common,
        ]
    )


def write_long_csv(path: Path, panel: Panel) -> Path:
    """Write a univariate panel in the long layout, skipping missing cells."""
    times = panel.time_labels
    lines = ["area,time,value"]
    for i, label in enumerate(panel.labels):
        for t, time in enumerate(times):
            if not panel.mask[i, t, 0]:
                lines.append(f"{label},{time},{float(panel.values[i, t, 0])!r}")
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path


@pytest.fixture
def rng() -> np.random.Generator:
    """Seeded generator for randomised property tests."""
    return np.random.default_rng(20240615)


@pytest.fixture
def demo_panel() -> CompletePanel:
    """The three-group demonstration panel."""
    return CompletePanel(values=demo_values(), labels=["Area_1", "Area_2", "Area_3", "Area_4"])


@pytest.fixture
def demo_csv(tmp_path, demo_panel) -> Path:
    """The demonstration panel as a long CSV file."""
    return write_long_csv(tmp_path / "demo.csv", demo_panel)


@pytest.fixture
def constant_panel() -> CompletePanel:
    """Three groups holding the same constant series, n = 20."""
    return CompletePanel(values=np.full((3, 20), 4.0), labels=["A", "B", "C"])


@pytest.fixture
def imr_data_dir() -> Path:
    """The survey data directory; skips the test when it is not configured."""
    directory = os.environ.get(IMR_DATA_ENV)
    if not directory or not Path(directory).is_dir():
        pytest.skip(f"{IMR_DATA_ENV} does not point to a directory")
    return Path(directory)


# endregion
