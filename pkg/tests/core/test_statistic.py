"""Test suite for the homogeneity statistic and the subsample statistics."""

import numpy as np
import pytest

from anovats.core import block_length, statistic, subsample_statistics
from anovats.core.statistic import finite_population_factor
from anovats.exceptions import InapplicableTestError
from anovats.panel import Panel


def naive_statistic(values: np.ndarray) -> float:
    """Transcribe T_n with explicit loops."""
    a, n, _ = values.shape
    group_means = [values[i].sum(axis=0) / n for i in range(a)]
    grand_mean = sum(group_means) / a
    return n * sum(float(np.sum((mean - grand_mean) ** 2)) for mean in group_means)


def naive_subsample_statistics(values: np.ndarray, b: int) -> list[float]:
    """Transcribe T_{n,b,t} with explicit loops."""
    a, n, _ = values.shape
    stats = []
    for t in range(n - b + 1):
        means = [values[i, t : t + b].sum(axis=0) / b for i in range(a)]
        centre = sum(means) / a
        stats.append(b / (1 - b / n) * sum(float(np.sum((mean - centre) ** 2)) for mean in means))
    return stats


def random_panel(rng: np.random.Generator) -> Panel:
    """Draw a panel with random shape, offsets and scale."""
    a = int(rng.integers(2, 11))
    n = int(rng.integers(5, 61))
    p = int(rng.integers(1, 4))
    offsets = rng.normal(scale=rng.uniform(0, 2), size=(a, 1, p))
    values = offsets + rng.standard_normal((a, n, p)) * rng.uniform(0.1, 10)
    return Panel(values=values, labels=[f"G{i}" for i in range(a)])


class TestStatistic:
    """Test suite for the `statistic` function."""

    def test_two_groups(self):
        """T_n of two groups is n times the squared half-difference, twice."""
        panel = Panel(values=[[1.0, 2.0, 3.0], [3.0, 4.0, 5.0]], labels=["A", "B"])
        t_n, group_means, grand_mean = statistic(panel)

        assert t_n == pytest.approx(3 * 2 * 1.0**2)
        np.testing.assert_allclose(group_means[:, 0], [2.0, 4.0])
        np.testing.assert_allclose(grand_mean, [3.0])

    def test_equal_means_give_zero(self, constant_panel):
        """Equal group means give exactly zero."""
        assert statistic(constant_panel)[0] == 0.0

    def test_missing_values(self):
        """The statistic needs a complete panel."""
        panel = Panel(values=[[1.0, np.nan, 3.0], [3.0, 4.0, 5.0]], labels=["A", "B"])
        with pytest.raises(InapplicableTestError):
            statistic(panel)

    def test_single_group(self):
        """The statistic needs at least two groups."""
        with pytest.raises(InapplicableTestError):
            statistic(Panel(values=[[1.0, 2.0, 3.0]], labels=["A"]))

    def test_matches_naive_transcription(self, rng):
        """T_n and every T_{n,b,t} match a loop transcription on random panels."""
        for _ in range(1000):
            panel = random_panel(rng)
            values = np.asarray(panel.values)
            b = block_length(panel.num_times)

            t_n = statistic(panel)[0]
            stats = subsample_statistics(panel, b)
            expected_stats = naive_subsample_statistics(values, b)

            assert t_n == pytest.approx(naive_statistic(values), rel=1e-12)
            np.testing.assert_allclose(stats, expected_stats, rtol=1e-12, atol=1e-12 * max(expected_stats))


class TestSubsampleStatistics:
    """Test suite for the `subsample_statistics` function."""

    def test_window_count(self, demo_panel):
        """There is one statistic per window."""
        assert subsample_statistics(demo_panel, 6).shape == (15,)

    def test_scaling(self):
        """Each window statistic carries the factor b / (1 - b/n)."""
        panel = Panel(values=[[0.0, 0.0, 0.0, 0.0], [2.0, 2.0, 2.0, 2.0]], labels=["A", "B"])
        stats = subsample_statistics(panel, 2)

        assert finite_population_factor(4, 2) == 4.0
        np.testing.assert_allclose(stats, [4.0 * 2.0] * 3)

    @pytest.mark.parametrize("b", [1, 20, 25])
    def test_block_out_of_range(self, demo_panel, b):
        """The block length must lie in [2, n - 1]."""
        with pytest.raises(InapplicableTestError):
            subsample_statistics(demo_panel, b)

    def test_noiseless_closed_form(self):
        """Group-constant series with 2b < n give window statistics below T_n."""
        effects = np.array([0.0, 1.0, 3.0])
        panel = Panel(values=np.repeat(effects[:, np.newaxis], 20, axis=1), labels=["A", "B", "C"])
        sum_of_squares = float(np.sum((effects - effects.mean()) ** 2))

        stats = subsample_statistics(panel, 7)
        t_n = statistic(panel)[0]

        assert finite_population_factor(20, 7) == pytest.approx(10.769, abs=1e-3)
        np.testing.assert_allclose(stats, 7 / (1 - 7 / 20) * sum_of_squares, rtol=1e-12)
        assert t_n == pytest.approx(20 * sum_of_squares, rel=1e-12)
        assert np.all(stats < t_n)

    @pytest.mark.parametrize("scale", [1.0, 1.5, 2.0, 10.0])
    def test_monotone_in_effect_size(self, scale):
        """Scaling the effects of a noiseless panel by at least one does not decrease T_n."""
        effects = np.array([0.0, 0.5, 2.0, 2.5])
        base = Panel(values=np.repeat(effects[:, np.newaxis], 12, axis=1), labels=["A", "B", "C", "D"])
        scaled = base.with_values(np.asarray(base.values) * scale)

        assert statistic(scaled)[0] >= statistic(base)[0]
