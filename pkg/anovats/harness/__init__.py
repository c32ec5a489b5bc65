"""Module providing the Monte Carlo size and power experiments."""

__all__ = ["SizeExperiment", "PowerExperiment", "ExperimentReport", "run_size", "run_power"]

from anovats.harness.experiment import ExperimentReport, PowerExperiment, SizeExperiment
from anovats.harness.runner import run_power, run_size
