"""Module for enumerations used in the app."""

from enum import Enum


class Layout(Enum):
    """Enumeration of the supported CSV panel layouts."""

    LONG = "long"
    WIDE = "wide"


class InnovationFamily(Enum):
    """Enumeration of the innovation distributions used by the simulation generators."""

    GAUSSIAN = "gaussian"
    STUDENT_T5 = "student_t5"
    SKEW_NORMAL_50 = "skew_normal_50"


class Dependence(Enum):
    """Enumeration of the cross-group dependence structures of the innovations."""

    CASE1_INDEPENDENT = "case1_independent"
    CASE2_CORRELATED = "case2_correlated"

    @property
    def case(self) -> int:
        """The case number used in experiment reports."""
        return 1 if self is Dependence.CASE1_INDEPENDENT else 2


class ProcessKind(Enum):
    """Enumeration of the disturbance processes."""

    MA1 = "ma1"
    GARCH = "garch"


class Season(Enum):
    """Enumeration of the meteorological seasons, in calendar order within a season year."""

    WINTER = "winter"
    SPRING = "spring"
    SUMMER = "summer"
    AUTUMN = "autumn"


class PowerMetric(Enum):
    """Enumeration of the metrics reported by the power experiment."""

    REJECT_AND_SPLIT = "reject_and_split"
    """Probability of rejecting the root hypothesis and splitting into the true two groups."""
    CHILD_REJECTION = "child_rejection"
    """Among correct first splits, probability that at least one child group is rejected."""
    CORRECT_SPLITS = "correct_splits"
    """Number of replications whose first split was correct."""
    CORRECT_CLUSTERING = "correct_clustering"
    """Probability that the final groups equal the true clustering."""


class Subcommand(Enum):
    """Enumeration of the CLI subcommands."""

    TEST = "test"
    CLUSTER = "cluster"
    PREPROCESS = "preprocess"
    SIMULATE = "simulate"
    SIZE = "size"
    POWER = "power"
