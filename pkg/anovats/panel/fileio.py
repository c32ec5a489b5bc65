"""File I/O module for panels.

Panels are read from and written to CSV in one of two layouts:

* ``long`` - header ``area,time,value`` (or ``area,time,dim,value`` when p > 1), one row per
  observed cell. Absent (area, time) pairs are missing.
* ``wide`` - one column per area and one row per time point. An optional leading ``time``
  column carries the time labels.

Empty cells and the literal token ``NA`` denote missing values.
"""

import logging
import re
from pathlib import Path

import numpy as np
import pandas as pd
from pydantic import ValidationError

from anovats._types import StrPath
from anovats.enumerations import Layout
from anovats.exceptions import PanelError
from anovats.panel.model import Panel

logger = logging.getLogger(__name__)
"""Logger for the module."""

MISSING_TOKENS = ("", "NA")
"""Tokens read as missing values."""
MISSING_OUTPUT = "NA"
"""Token written for missing values."""
LONG_COLUMNS = ("area", "time", "value")
LONG_DIM_COLUMNS = ("area", "time", "dim", "value")
TIME_COLUMN = "time"

_ORDERED_LABEL = re.compile(r"^\d+(?:-\d+)*$")

# first data row is line 2 of the file
_HEADER_OFFSET = 2


def _parse_value(token: str, row: int) -> float:
    """Parse a value token, returning NaN for the missing tokens."""
    if token in MISSING_TOKENS:
        return np.nan
    try:
        value = float(token)
    except ValueError as exc:
        raise PanelError(f"Non-numeric value {token!r}", row=row) from exc
    if not np.isfinite(value):
        raise PanelError(f"Non-finite value {token!r}", row=row)
    return value


def _format_value(value: float) -> str:
    """Format a value with the shortest representation that reads back bit-exactly."""
    if np.isnan(value):
        return MISSING_OUTPUT
    return repr(float(value))


def _order_time_labels(frame: pd.DataFrame) -> list[str]:
    """Return the time axis of a long frame.

    When every area lists the same time labels in the same order, that order is kept. Otherwise
    numeric and date-like labels are ordered chronologically and other labels by appearance.

    """
    labels = list(pd.unique(frame["time"]))
    per_area = frame.drop_duplicates(subset=["area", "time"]).groupby("area", sort=False)["time"]
    if all(list(times) == labels for _, times in per_area):
        return labels
    if labels and all(_ORDERED_LABEL.match(label) for label in labels):
        return sorted(labels, key=lambda label: tuple(int(part) for part in label.split("-")))
    return labels


def _read_frame(path: StrPath) -> pd.DataFrame:
    try:
        return pd.read_csv(
            path,
            dtype=str,
            keep_default_na=False,
            na_filter=False,
            skipinitialspace=False,
        )
    except (OSError, pd.errors.ParserError, pd.errors.EmptyDataError) as exc:
        raise PanelError(f"Unreadable CSV {path}: {exc}") from exc


def _build_panel(**kwargs) -> Panel:
    try:
        panel = Panel(**kwargs)
    except ValidationError as exc:
        raise PanelError(f"Invalid panel: {exc.errors()[0]['msg']}") from exc
    if panel.num_groups < 2:
        raise PanelError(f"At least 2 areas are required, found {panel.num_groups}")
    return panel


def _read_long(frame: pd.DataFrame) -> Panel:
    columns = tuple(column.strip() for column in frame.columns)
    if columns not in (LONG_COLUMNS, LONG_DIM_COLUMNS):
        raise PanelError(
            f"Long layout requires header {','.join(LONG_COLUMNS)} or {','.join(LONG_DIM_COLUMNS)}, got "
            f"{','.join(columns)}"
        )
    frame.columns = list(columns)
    has_dim = "dim" in columns
    if not has_dim:
        frame["dim"] = "value"
    keys = ["area", "time", "dim"]

    duplicated = frame.duplicated(subset=keys, keep="first")
    if duplicated.any():
        position = int(np.flatnonzero(duplicated.to_numpy())[0])
        cell = tuple(frame.iloc[position][keys[: 3 if has_dim else 2]])
        raise PanelError(f"Duplicate cell {cell}", row=position + _HEADER_OFFSET)

    labels = list(pd.unique(frame["area"]))
    times = _order_time_labels(frame)
    dims = list(pd.unique(frame["dim"]))

    area_pos = {label: i for i, label in enumerate(labels)}
    time_pos = {label: i for i, label in enumerate(times)}
    dim_pos = {label: i for i, label in enumerate(dims)}

    values = np.full((len(labels), len(times), len(dims)), np.nan)
    for position, (area, time, dim, token) in enumerate(
        frame[["area", "time", "dim", "value"]].itertuples(index=False, name=None)
    ):
        values[area_pos[area], time_pos[time], dim_pos[dim]] = _parse_value(token, position + _HEADER_OFFSET)

    logger.debug("Read %d long rows into %d areas x %d times x %d dims", len(frame), *values.shape)
    return _build_panel(
        values=values,
        labels=labels,
        time_index=times,
        dim_labels=dims if has_dim else None,
    )


def _read_wide(frame: pd.DataFrame) -> Panel:
    columns = [column.strip() for column in frame.columns]
    time_index = None
    if columns and columns[0].lower() == TIME_COLUMN:
        time_index = frame.iloc[:, 0].tolist()
        frame = frame.iloc[:, 1:]
        columns = columns[1:]

    values = np.empty((len(columns), len(frame.index)))
    for position, row in enumerate(frame.itertuples(index=False, name=None)):
        values[:, position] = [_parse_value(token, position + _HEADER_OFFSET) for token in row]

    logger.debug("Read %d wide rows into %d areas", len(frame.index), len(columns))
    return _build_panel(values=values, labels=columns, time_index=time_index)


def read_csv(path: StrPath, layout: Layout | str = Layout.LONG) -> Panel:
    """Read a panel from a CSV file.

    Args:
        path (StrPath): The CSV file.
        layout (Layout | str, optional): The file layout. Defaults to Layout.LONG.

    Returns:
        Panel: The panel, groups in order of first appearance (long) or column order (wide).

    Raises:
        PanelError: On duplicate cells, non-numeric tokens, a malformed header or fewer than
            two areas.

    """
    layout = Layout(layout)
    frame = _read_frame(path)
    logger.info("📖 Reading %s panel from %s", layout.value, path)
    if layout is Layout.LONG:
        return _read_long(frame)
    return _read_wide(frame)


def panel_to_frame(panel: Panel, layout: Layout | str = Layout.LONG) -> pd.DataFrame:
    """Convert a panel to a DataFrame of formatted string cells.

    Args:
        panel (Panel): The panel to convert.
        layout (Layout | str, optional): The target layout. Defaults to Layout.LONG.

    Returns:
        pd.DataFrame: The frame, ready to be written as CSV.

    """
    layout = Layout(layout)
    times = panel.time_labels

    if layout is Layout.WIDE:
        if panel.dim != 1:
            raise PanelError("The wide layout holds univariate panels only")
        data = {TIME_COLUMN: times}
        for i, label in enumerate(panel.labels):
            data[label] = [_format_value(value) for value in panel.values[i, :, 0]]
        return pd.DataFrame(data)

    with_dim = panel.dim_labels is not None or panel.dim > 1
    dims = panel.coordinate_labels
    records = []
    for i, label in enumerate(panel.labels):
        for t, time in enumerate(times):
            for d, dim in enumerate(dims):
                record = [label, time, dim] if with_dim else [label, time]
                record.append(_format_value(panel.values[i, t, d]))
                records.append(record)
    return pd.DataFrame(records, columns=list(LONG_DIM_COLUMNS if with_dim else LONG_COLUMNS))


def write_csv(panel: Panel, path: StrPath, layout: Layout | str = Layout.LONG) -> Path:
    """Write a panel to a CSV file.

    Missing cells are written as ``NA``; values use ``.`` as the decimal separator and the
    shortest representation that reads back bit-exactly.

    Args:
        panel (Panel): The panel to write.
        path (StrPath): The target file.
        layout (Layout | str, optional): The file layout. Defaults to Layout.LONG.

    Returns:
        Path: The path written.

    """
    path = Path(path)
    frame = panel_to_frame(panel, layout)
    frame.to_csv(path, index=False, lineterminator="\n")
    logger.info("💾 Wrote %d rows to %s", len(frame.index), path)
    return path
