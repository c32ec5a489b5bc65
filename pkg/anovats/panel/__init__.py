"""Module providing the panel data model and its CSV ingestion."""

__all__ = [
    "Panel",
    "CompletePanel",
    "read_csv",
    "write_csv",
    "panel_to_frame",
    "drop_incomplete_groups",
    "restrict_time",
]

from anovats.panel.fileio import panel_to_frame, read_csv, write_csv
from anovats.panel.filter import drop_incomplete_groups, restrict_time
from anovats.panel.model import CompletePanel, Panel
