"""MA(1) and GARCH disturbance generators."""

__all__ = ["ma1_filter", "garch_filter", "gen_ma1", "gen_garch", "GARCH_ARCH_SCALE", "GARCH_LAG_COEFFICIENT"]

import logging

import numpy as np

from anovats._types import FloatArray
from anovats.enumerations import ProcessKind
from anovats.exceptions import GarchExplosionError, SimulationError
from anovats.simgen.innovations import draw_innovations
from anovats.simgen.rng import RngStream, as_generator
from anovats.simgen.spec import ProcessSpec

logger = logging.getLogger(__name__)

GARCH_INTERCEPT = 1.0
GARCH_ARCH_SCALE = 0.1
"""The ARCH matrix is this scale times psi."""
GARCH_LAG_COEFFICIENT = 0.1
"""Coefficient of the lagged conditional variance."""


def ma1_filter(innovations: FloatArray, psi: FloatArray) -> FloatArray:
    """Apply ``e_t = nu_t + psi nu_{t-1}`` to ``n + 1`` innovation rows, returning ``n`` rows."""
    innovations = np.asarray(innovations, dtype=np.float64)
    return innovations[1:] + innovations[:-1] @ np.asarray(psi).T


def _unconditional_variance(psi: FloatArray) -> FloatArray:
    a = psi.shape[0]
    system = np.eye(a) * (1.0 - GARCH_LAG_COEFFICIENT) - GARCH_ARCH_SCALE * psi
    try:
        level = np.linalg.solve(system, np.full(a, GARCH_INTERCEPT))
    except np.linalg.LinAlgError:
        level = None
    if level is None or not np.all(np.isfinite(level)) or np.any(level <= 0):
        return np.full(a, GARCH_INTERCEPT / (1.0 - GARCH_LAG_COEFFICIENT))
    return level


def garch_filter(innovations: FloatArray, psi: FloatArray, burn_in: int) -> tuple[FloatArray, FloatArray]:
    """Run ``h_t = 1 + 0.1 psi e_{t-1}^2 + 0.1 h_{t-1}``, ``e_t = sqrt(h_t) nu_t``.

    The recursion starts at the unconditional variance level and the first ``burn_in`` rows
    are discarded.

    Args:
        innovations (FloatArray): ``(burn_in + n, a)`` innovations.
        psi (FloatArray): The ``(a, a)`` coefficient matrix.
        burn_in (int): The number of leading rows discarded.

    Returns:
        tuple[FloatArray, FloatArray]: The disturbances and conditional variances, ``(n, a)`` each.

    Raises:
        GarchExplosionError: If a conditional variance is not finite and positive.

    """
    innovations = np.asarray(innovations, dtype=np.float64)
    psi = np.asarray(psi, dtype=np.float64)
    arch = GARCH_ARCH_SCALE * psi
    total, a = innovations.shape

    disturbances = np.empty((total, a))
    variances = np.empty((total, a))
    h_prev = _unconditional_variance(psi)
    e2_prev = h_prev
    floor = np.finfo(np.float64).tiny
    for t in range(total):
        h = GARCH_INTERCEPT + arch @ e2_prev + GARCH_LAG_COEFFICIENT * h_prev
        if not np.all(np.isfinite(h)) or np.any(h <= floor):
            raise GarchExplosionError(
                f"GARCH conditional variance left (0, inf) at step {t} for psi={psi.tolist()}"
            )
        e = np.sqrt(h) * innovations[t]
        disturbances[t] = e
        variances[t] = h
        h_prev, e2_prev = h, e * e

    logger.debug("GARCH recursion over %d steps, %d discarded", total, burn_in)
    return disturbances[burn_in:], variances[burn_in:]


def _check_kind(spec: ProcessSpec, kind: ProcessKind) -> None:
    if spec.kind is not kind:
        raise SimulationError(f"Expected a {kind.value} process, got {spec.kind.value}")


def gen_ma1(spec: ProcessSpec, rng: RngStream | np.random.Generator) -> FloatArray:
    """Generate MA(1) disturbances.

    Each coordinate is generated from its own ``n + 1`` innovation rows, the first being the
    presample innovation.

    Args:
        spec (ProcessSpec): An MA(1) specification.
        rng (RngStream | np.random.Generator): The random stream.

    Returns:
        FloatArray: An ``(n, a * p)`` array; columns ``d * a`` to ``(d + 1) * a - 1`` hold
            coordinate ``d``.

    """
    _check_kind(spec, ProcessKind.MA1)
    generator = as_generator(rng)
    blocks = [ma1_filter(draw_innovations(spec.innovation, spec.n + 1, generator), spec.psi) for _ in range(spec.dim)]
    return np.hstack(blocks)


def gen_garch(spec: ProcessSpec, rng: RngStream | np.random.Generator) -> FloatArray:
    """Generate GARCH disturbances after a burn-in.

    Args:
        spec (ProcessSpec): A GARCH specification.
        rng (RngStream | np.random.Generator): The random stream.

    Returns:
        FloatArray: An ``(n, a * p)`` array laid out as in `gen_ma1`.

    Raises:
        GarchExplosionError: If the conditional variance explodes or vanishes.

    """
    _check_kind(spec, ProcessKind.GARCH)
    generator = as_generator(rng)
    blocks = []
    for _ in range(spec.dim):
        innovations = draw_innovations(spec.innovation, spec.burn_in + spec.n, generator)
        disturbances, _ = garch_filter(innovations, spec.psi, spec.burn_in)
        blocks.append(disturbances)
    return np.hstack(blocks)
