"""Innovation samplers for the simulation processes."""

__all__ = ["draw_innovations", "SKEW_SHAPE", "T_DOF"]

import numpy as np

from anovats._types import FloatArray
from anovats.enumerations import Dependence, InnovationFamily
from anovats.exceptions import SimulationError
from anovats.simgen.rng import RngStream, as_generator
from anovats.simgen.spec import InnovationSpec, innovation_covariance

SKEW_SHAPE = 50.0
"""Shape parameter of the skew-normal innovations."""
T_DOF = 5
"""Degrees of freedom of the t innovations."""


def _gaussian(generator: np.random.Generator, covariance: FloatArray, n_draws: int, independent: bool) -> FloatArray:
    a = covariance.shape[0]
    if independent:
        return generator.standard_normal((n_draws, a))
    return generator.multivariate_normal(np.zeros(a), covariance, size=n_draws, method="cholesky")


def _skew_normal(generator: np.random.Generator, covariance: FloatArray, n_draws: int, independent: bool) -> FloatArray:
    """Centred skew-normal draws, ``delta |U0| + W`` with ``W ~ N(0, Omega - delta delta')``."""
    a = covariance.shape[0]
    if independent:
        delta = np.full(a, SKEW_SHAPE / np.sqrt(1.0 + SKEW_SHAPE**2))
        half_normal = np.abs(generator.standard_normal((n_draws, a)))
        noise = generator.standard_normal((n_draws, a)) * np.sqrt(1.0 - delta**2)
        return delta * half_normal + noise - delta * np.sqrt(2.0 / np.pi)

    shape = np.full(a, SKEW_SHAPE)
    delta = covariance @ shape / np.sqrt(1.0 + shape @ covariance @ shape)
    half_normal = np.abs(generator.standard_normal(n_draws))
    noise = generator.multivariate_normal(np.zeros(a), covariance - np.outer(delta, delta), size=n_draws, method="eigh")
    return half_normal[:, np.newaxis] * delta + noise - delta * np.sqrt(2.0 / np.pi)


def draw_innovations(spec: InnovationSpec, n_draws: int, rng: RngStream | np.random.Generator) -> FloatArray:
    """Draw innovation vectors, one row per time step.

    Independent innovations are i.i.d. per coordinate. Correlated innovations use a scale
    matrix with unit diagonal and 0.5 between adjacent coordinates.

    Args:
        spec (InnovationSpec): The innovation distribution.
        n_draws (int): The number of rows.
        rng (RngStream | np.random.Generator): The random stream.

    Returns:
        FloatArray: An ``(n_draws, a)`` array of centred innovations.

    Raises:
        SimulationError: If ``n_draws`` is negative.

    """
    if n_draws < 0:
        raise SimulationError(f"n_draws must be non-negative, got {n_draws}")
    generator = as_generator(rng)
    covariance = innovation_covariance(spec)
    independent = spec.dependence is Dependence.CASE1_INDEPENDENT

    if spec.family is InnovationFamily.GAUSSIAN:
        return _gaussian(generator, covariance, n_draws, independent)

    if spec.family is InnovationFamily.STUDENT_T5:
        if independent:
            return generator.standard_t(T_DOF, (n_draws, spec.dimension))
        gaussian = _gaussian(generator, covariance, n_draws, independent=False)
        scale = np.sqrt(T_DOF / generator.chisquare(T_DOF, n_draws))
        return gaussian * scale[:, np.newaxis]

    return _skew_normal(generator, covariance, n_draws, independent)
