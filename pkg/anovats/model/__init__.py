"""Result records of the test and the post-hoc procedure."""

__all__ = ["TestResult", "ClusterNode", "ClusterResult", "TraceEntry"]

from anovats.model.result import ClusterNode, ClusterResult, TestResult, TraceEntry
