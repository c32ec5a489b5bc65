"""Test suite for the innovation samplers and the disturbance generators."""

import numpy as np
import pytest

from anovats.enumerations import Dependence, InnovationFamily, ProcessKind
from anovats.exceptions import GarchExplosionError, SimulationError
from anovats.simgen import InnovationSpec, RngStream, draw_innovations, gen_garch, gen_ma1, process_preset
from anovats.simgen.processes import garch_filter, ma1_filter


class TestMa1Filter:
    """Test suite for the `ma1_filter` function."""

    def test_zero_psi(self, rng):
        """A zero matrix passes the innovations through."""
        nu = rng.standard_normal((11, 3))
        np.testing.assert_array_equal(ma1_filter(nu, np.zeros((3, 3))), nu[1:])

    def test_matches_loop(self, rng):
        """The filter equals e_t = nu_t + psi nu_{t-1}."""
        nu = rng.standard_normal((21, 3))
        psi = rng.normal(size=(3, 3))
        expected = np.array([nu[t] + psi @ nu[t - 1] for t in range(1, 21)])

        np.testing.assert_allclose(ma1_filter(nu, psi), expected, rtol=1e-12)

    def test_case2_generator_oracle(self):
        """The correlated-case generator is the two-term convolution of its recorded innovations."""
        spec = process_preset(1, 2, a=6, n=40)
        nu = draw_innovations(spec.innovation, 41, RngStream(seed=3))
        psi = spec.psi
        expected = np.array([[nu[t, i] + psi[i] @ nu[t - 1] for i in range(6)] for t in range(1, 41)])

        np.testing.assert_allclose(gen_ma1(spec, RngStream(seed=3)), expected, rtol=1e-14, atol=1e-14)
        assert psi[2, 0] == 0.3 and psi[2, 1] == 0.1 and psi[2, 2] == 0.3


class TestGarchFilter:
    """Test suite for the `garch_filter` function."""

    def test_zero_innovations(self):
        """Without shocks the variance settles at 1 / 0.9."""
        _, variances = garch_filter(np.zeros((200, 2)), 0.5 * np.eye(2), burn_in=100)

        np.testing.assert_allclose(variances, 1 / 0.9, rtol=1e-12)

    def test_burn_in_discarded(self, rng):
        """The burn-in rows are dropped."""
        disturbances, variances = garch_filter(rng.standard_normal((150, 3)), 0.5 * np.eye(3), burn_in=100)

        assert disturbances.shape == variances.shape == (50, 3)
        assert np.all(variances > 0)

    def test_explosion(self):
        """A negative ARCH matrix drives the variance below zero."""
        with pytest.raises(GarchExplosionError):
            garch_filter(np.full((5, 1), 10.0), np.array([[-100.0]]), burn_in=0)


class TestGenerators:
    """Test suite for the process generators."""

    @pytest.mark.parametrize("process", [1, 2, 3, 4])
    @pytest.mark.parametrize("case", [1, 2])
    def test_shape(self, process, case):
        """Every preset gives an (n, a) array."""
        spec = process_preset(process, case, a=6, n=25)
        generate = gen_ma1 if spec.kind is ProcessKind.MA1 else gen_garch

        assert generate(spec, RngStream(seed=1)).shape == (25, 6)

    def test_reproducible(self):
        """The same stream gives the same draws; other streams differ."""
        spec = process_preset(1, 1, a=3, n=30)

        first = gen_ma1(spec, RngStream(seed=7, stream_id=2))
        again = gen_ma1(spec, RngStream(seed=7, stream_id=2))
        other = gen_ma1(spec, RngStream(seed=7, stream_id=3))

        np.testing.assert_array_equal(first, again)
        assert not np.array_equal(first, other)

    def test_wrong_kind(self):
        """A generator only accepts its own process kind."""
        with pytest.raises(SimulationError):
            gen_garch(process_preset(1, 1, a=3, n=10), RngStream(seed=0))

    def test_case2_needs_multiple_of_three(self):
        """The correlated case is built from 3 x 3 blocks."""
        with pytest.raises(SimulationError, match="divisible by 3"):
            process_preset(1, 2, a=4, n=20)

    @pytest.mark.parametrize("family", list(InnovationFamily))
    @pytest.mark.parametrize("dependence", list(Dependence))
    def test_innovation_shape(self, family, dependence):
        """Every innovation family draws (n, a) arrays."""
        spec = InnovationSpec(family=family, dependence=dependence, dimension=3)
        assert draw_innovations(spec, 12, RngStream(seed=5)).shape == (12, 3)


@pytest.mark.slow
class TestMoments:
    """Moment checks on 10^5 draws."""

    def test_ma1_autocovariance(self):
        """MA(1) with psi 0.5 has variance 1.25 and lag-1 autocovariance 0.5."""
        spec = process_preset(1, 1, a=3, n=100_000)
        e = gen_ma1(spec, RngStream(seed=11))

        assert np.mean(e * e) == pytest.approx(1.25, abs=0.02)
        assert np.mean(e[1:] * e[:-1]) == pytest.approx(0.5, abs=0.02)

    def test_garch_variance(self):
        """GARCH with psi 0.5 I has unconditional variance 1 / 0.85."""
        spec = process_preset(4, 1, a=3, n=100_000)
        e = gen_garch(spec, RngStream(seed=12))

        assert np.mean(e * e) == pytest.approx(1 / 0.85, abs=0.05)

    def test_garch_burn_in_invariance(self):
        """Doubling the burn-in leaves the disturbance moments unchanged."""
        short = gen_garch(process_preset(4, 1, a=3, n=50_000), RngStream(seed=15))
        long = gen_garch(process_preset(4, 1, a=3, n=50_000, burn_in=1000), RngStream(seed=16))

        assert np.mean(short) == pytest.approx(np.mean(long), abs=0.03)
        assert np.mean(short * short) == pytest.approx(np.mean(long * long), abs=0.05)

    def test_case2_correlation(self):
        """Adjacent correlated innovations have correlation 0.5."""
        spec = InnovationSpec(dependence=Dependence.CASE2_CORRELATED, dimension=3)
        nu = draw_innovations(spec, 100_000, RngStream(seed=13))

        assert np.corrcoef(nu[:, 0], nu[:, 1])[0, 1] == pytest.approx(0.5, abs=0.02)
        assert np.corrcoef(nu[:, 0], nu[:, 2])[0, 1] == pytest.approx(0.0, abs=0.02)

    @pytest.mark.parametrize("dependence", list(Dependence))
    def test_skew_normal_centred(self, dependence):
        """Skew-normal innovations are centred and right skewed."""
        spec = InnovationSpec(family=InnovationFamily.SKEW_NORMAL_50, dependence=dependence, dimension=3)
        nu = draw_innovations(spec, 100_000, RngStream(seed=14))

        np.testing.assert_allclose(nu.mean(axis=0), 0.0, atol=0.02)
        assert np.all(np.mean(nu**3, axis=0) > 0)

