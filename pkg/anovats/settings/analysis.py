"""Settings for the test and cluster subcommands."""

from typing import Optional

from pydantic import Field

from anovats._types import AlphaSchedule
from anovats.posthoc.cluster import vanishing_alpha
from anovats.settings.app import AppSettings


class TestSettings(AppSettings):
    """Settings for a single homogeneity test."""

    __test__ = False  # not a pytest test class


class ClusterSettings(AppSettings):
    """Settings for the post-hoc clustering procedure."""

    alpha_rate: Optional[float] = Field(default=None, ge=0)
    """When set, every node is tested at ``alpha * n ** -alpha_rate``."""

    @property
    def alpha_schedule(self) -> float | AlphaSchedule:
        """The constant level, or the vanishing schedule when ``alpha_rate`` is set."""
        if self.alpha_rate is None:
            return self.alpha
        return vanishing_alpha(self.alpha, self.alpha_rate)
