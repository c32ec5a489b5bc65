"""Parallel execution of the size and power experiments."""

__all__ = ["run_size", "run_power", "resolve_threads", "draw_replication"]

import logging
from typing import Optional

import numpy as np
from joblib import Parallel, delayed

from anovats.core.block import BlockRule
from anovats.core.decision import homogeneity_test
from anovats.enumerations import PowerMetric
from anovats.exceptions import GarchExplosionError
from anovats.harness.experiment import (
    REDRAW_METRIC,
    SIZE_METRIC,
    ExperimentReport,
    ExperimentRow,
    PowerExperiment,
    SizeExperiment,
)
from anovats.panel.model import CompletePanel
from anovats.posthoc.cluster import cluster
from anovats.simgen.assemble import assemble_panel
from anovats.simgen.rng import RngStream
from anovats.simgen.spec import ProcessSpec, process_preset

logger = logging.getLogger(__name__)

MAX_REDRAWS = 100
"""Redraws allowed per replication before a variance explosion is raised."""


def resolve_threads(threads: Optional[int] = None) -> int:
    """Return the joblib worker count, all cores when ``threads`` is None."""
    return -1 if threads is None else max(1, threads)


def draw_replication(spec: ProcessSpec, seed: int, rep: int) -> tuple[CompletePanel, int]:
    """Generate the panel of one replication, redrawing after a GARCH variance explosion.

    Attempt ``k`` of replication ``rep`` uses the stream with spawn key ``(rep, k)``, so the
    redraws are as reproducible as the first draw.

    Args:
        spec (ProcessSpec): The process specification.
        seed (int): The base seed.
        rep (int): The replication number.

    Returns:
        tuple[CompletePanel, int]: The panel and the number of redraws it took.

    Raises:
        GarchExplosionError: If every one of the allowed redraws explodes too.

    """
    stream = RngStream(seed=seed, stream_id=rep)
    while True:
        try:
            return assemble_panel(spec, stream), stream.attempt
        except GarchExplosionError as exc:
            if stream.attempt >= MAX_REDRAWS:
                raise
            logger.debug("Replication %d attempt %d redrawn: %s", rep, stream.attempt, exc)
            stream = stream.redraw()


def _size_replication(
    spec: ProcessSpec, c_list: list[float], alpha: float, seed: int, rep: int
) -> tuple[list[bool], int]:
    panel, redraws = draw_replication(spec, seed, rep)
    return [homogeneity_test(panel, BlockRule(c=c), alpha).reject for c in c_list], redraws


def run_size(experiment: SizeExperiment, seed: int, threads: Optional[int] = None) -> ExperimentReport:
    """Estimate the empirical size of the test on every grid cell.

    Replication ``r`` of every cell uses stream ``r`` of ``seed``, and the same panel is tested
    with every block constant.

    Args:
        experiment (SizeExperiment): The experiment grid.
        seed (int): The base seed.
        threads (int, optional): The number of workers. Defaults to all cores.

    Returns:
        ExperimentReport: One ``empirical_size`` and one ``garch_redraws`` row per
            (process, case, a, n, c).

    """
    rows: list[ExperimentRow] = []
    with Parallel(n_jobs=resolve_threads(threads)) as parallel:
        for process in experiment.processes:
            for case in experiment.cases:
                for a in experiment.a_list:
                    for n in experiment.n_list:
                        spec = process_preset(process, case, a, n)
                        results = parallel(
                            delayed(_size_replication)(spec, experiment.c_list, experiment.alpha, seed, rep)
                            for rep in range(experiment.reps)
                        )
                        rejections = np.array([decisions for decisions, _ in results], dtype=bool).reshape(
                            experiment.reps, len(experiment.c_list)
                        )
                        redraws = sum(count for _, count in results)
                        for c, size in zip(experiment.c_list, rejections.mean(axis=0)):
                            for metric, value in ((SIZE_METRIC, float(size)), (REDRAW_METRIC, float(redraws))):
                                rows.append(
                                    ExperimentRow(
                                        process=process,
                                        case=case,
                                        a=a,
                                        n=n,
                                        c=c,
                                        reps=experiment.reps,
                                        seed=seed,
                                        metric=metric,
                                        value=value,
                                    )
                                )
                        if redraws:
                            logger.warning(
                                "Size cell process=%d case=%d a=%d n=%d needed %d redraws after variance explosions",
                                process,
                                case,
                                a,
                                n,
                                redraws,
                            )
                        logger.info("Size cell process=%d case=%d a=%d n=%d done", process, case, a, n)
    return ExperimentReport(rows=rows)


def _power_replication(
    spec: ProcessSpec, experiment: PowerExperiment, seed: int, rep: int
) -> tuple[bool, bool, bool, int]:
    """Return (correct first split, child rejected after a correct split, correct clustering, redraws)."""
    panel, redraws = draw_replication(spec, seed, rep)
    truth = experiment.truth(panel.labels)
    result = cluster(panel, BlockRule(c=experiment.c), experiment.alpha)

    root = result.root
    correct_split = root.children is not None and {frozenset(child.members) for child in root.children} == set(truth)
    child_rejected = correct_split and any(child.children is not None for child in root.children or ())
    correct_clustering = {frozenset(group) for group in result.final_groups} == set(truth)
    return correct_split, child_rejected, correct_clustering, redraws


def run_power(experiment: PowerExperiment, seed: int, threads: Optional[int] = None) -> ExperimentReport:
    """Estimate the power and clustering metrics of the post-hoc procedure.

    Metrics per (process, case, n): the probability of rejecting and splitting into the true
    groups; among those replications, the probability that a child group is rejected (NaN when
    there are none); the count of correct first splits; and the probability of recovering the
    true clustering. A ``garch_redraws`` row counts the replications redrawn after a variance
    explosion.

    Args:
        experiment (PowerExperiment): The experiment grid.
        seed (int): The base seed.
        threads (int, optional): The number of workers. Defaults to all cores.

    Returns:
        ExperimentReport: Five rows per (process, case, n).

    """
    rows: list[ExperimentRow] = []
    with Parallel(n_jobs=resolve_threads(threads)) as parallel:
        for process in experiment.processes:
            for case in experiment.cases:
                for n in experiment.n_list:
                    spec = process_preset(process, case, experiment.a, n, effects=experiment.effects)
                    spec = spec.model_copy(update={"noise_scale": experiment.noise_scale})
                    results = parallel(
                        delayed(_power_replication)(spec, experiment, seed, rep) for rep in range(experiment.reps)
                    )
                    outcomes = np.array([result[:3] for result in results], dtype=bool).reshape(experiment.reps, 3)
                    redraws = sum(result[3] for result in results)
                    splits = int(outcomes[:, 0].sum())
                    metrics = {
                        PowerMetric.REJECT_AND_SPLIT.value: splits / experiment.reps,
                        PowerMetric.CHILD_REJECTION.value: outcomes[:, 1].sum() / splits if splits else float("nan"),
                        PowerMetric.CORRECT_SPLITS.value: float(splits),
                        PowerMetric.CORRECT_CLUSTERING.value: float(outcomes[:, 2].mean()),
                        REDRAW_METRIC: float(redraws),
                    }
                    for metric, value in metrics.items():
                        rows.append(
                            ExperimentRow(
                                process=process,
                                case=case,
                                a=experiment.a,
                                n=n,
                                c=experiment.c,
                                reps=experiment.reps,
                                seed=seed,
                                metric=metric,
                                value=float(value),
                            )
                        )
                    if redraws:
                        logger.warning(
                            "Power cell process=%d case=%d n=%d needed %d redraws after variance explosions",
                            process,
                            case,
                            n,
                            redraws,
                        )
                    logger.info("Power cell process=%d case=%d n=%d done", process, case, n)
    return ExperimentReport(rows=rows)
