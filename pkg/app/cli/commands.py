"""Subcommand handlers.

Every handler takes its loaded settings and returns the text destined for stdout; results
written to ``--output`` are not echoed.
"""

import logging
from pathlib import Path
from typing import Optional

from anovats import __app_name__
from anovats.core import homogeneity_test
from anovats.exceptions import ConfigurationError
from anovats.harness import run_power, run_size
from anovats.panel import Panel, drop_incomplete_groups, panel_to_frame, read_csv, restrict_time
from anovats.posthoc import cluster
from anovats.preprocess import preprocess_panel
from anovats.settings import (
    AppSettings,
    ClusterSettings,
    PowerSettings,
    PreprocessSettings,
    SimulateSettings,
    SizeSettings,
    TestSettings,
)
from anovats.simgen import RngStream, assemble_panel

logger = logging.getLogger(__app_name__)


def _emit(text: str, path: Optional[Path]) -> str:
    """Write ``text`` to ``path`` and return nothing for stdout, or return it unchanged."""
    if path is None:
        return text
    path.write_text(text, encoding="utf-8")
    logger.info("💾 Wrote %s", path)
    return ""


def _frame_text(panel: Panel, settings: AppSettings) -> str:
    return panel_to_frame(panel, settings.layout).to_csv(index=False, lineterminator="\n")


def load_panel(settings: AppSettings) -> Panel:
    """Read the input panel and apply the time range and missing-data filters.

    Raises:
        ConfigurationError: If no input file is configured.

    """
    if settings.input is None:
        raise ConfigurationError("an input file is required (--input)")
    panel = read_csv(settings.input, settings.layout)
    logger.info("Read %d areas x %d times x %d coordinates", panel.num_groups, panel.num_times, panel.dim)

    time_range = settings.time_range()
    if time_range is not None:
        panel = restrict_time(panel, *time_range)
    if settings.max_missing_fraction is not None:
        panel = drop_incomplete_groups(panel, settings.max_missing_fraction)
    return panel


def handle_test(settings: TestSettings) -> str:
    """Run the homogeneity test; print the result JSON and a summary line."""
    result = homogeneity_test(load_panel(settings), settings.block_rule, settings.alpha)
    stdout = _emit(result.to_json() + "\n", settings.output)
    return stdout + result.summary() + "\n"


def handle_cluster(settings: ClusterSettings, output_format: str = "text") -> str:
    """Run the post-hoc procedure and render the tree, trace and final groups."""
    result = cluster(load_panel(settings), settings.block_rule, settings.alpha_schedule)
    text = result.to_json() if output_format == "json" else result.to_text()
    return _emit(text + "\n", settings.output)


def handle_preprocess(settings: PreprocessSettings) -> str:
    """Aggregate, transform and impute a monthly panel; write the quarterly CSV and sidecar."""
    prepared = preprocess_panel(
        load_panel(settings),
        max_order=settings.max_order,
        lambda_grid=(settings.lambda_min, settings.lambda_max),
        step=settings.lambda_step,
        shift=settings.shift,
    )
    sidecar = settings.sidecar_path
    if sidecar is not None:
        sidecar.write_text(prepared.sidecar_json() + "\n", encoding="utf-8")
        logger.info("💾 Wrote series fits to %s", sidecar)
    else:
        logger.warning("No output path; the series fits are not written")
    return _emit(_frame_text(prepared.panel, settings), settings.output)


def handle_simulate(settings: SimulateSettings) -> str:
    """Generate one panel from the configured process."""
    process = settings.process_spec()
    panel = assemble_panel(process, RngStream(seed=settings.seed, stream_id=0))
    return _emit(_frame_text(panel, settings), settings.output)


def handle_size(settings: SizeSettings) -> str:
    """Run the empirical size experiment."""
    report = run_size(settings.build_experiment(), settings.seed, threads=settings.threads)
    text = report.to_csv(settings.output)
    return "" if settings.output is not None else text


def handle_power(settings: PowerSettings) -> str:
    """Run the power experiment."""
    report = run_power(settings.build_experiment(), settings.seed, threads=settings.threads)
    text = report.to_csv(settings.output)
    return "" if settings.output is not None else text
