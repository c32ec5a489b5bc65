"""Subsampling block length rule."""

__all__ = ["BlockRule", "block_length", "small_n_guarantee", "DEFAULT_BLOCK_CONSTANT", "MIN_TIMES"]

import logging
import math
from typing import Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from anovats.exceptions import InapplicableTestError

logger = logging.getLogger(__name__)

DEFAULT_BLOCK_CONSTANT = 2.5
"""Constant c of the rule b = floor(c * n ** (1/3))."""
MIN_TIMES = 3
"""Smallest number of time points the test accepts."""


class BlockRule(BaseModel):
    """Rule giving the subsampling block length for a series length.

    The block length is ``floor(c * n ** (1/3))`` unless ``override_b`` is set. Either way the
    result is clamped to ``[2, n - 1]``.

    """

    model_config = ConfigDict(frozen=True)

    c: float = Field(default=DEFAULT_BLOCK_CONSTANT, gt=0)
    """The block constant."""
    override_b: Optional[int] = Field(default=None, ge=1)
    """An explicit block length replacing the formula."""


def block_length(n: int, rule: Optional[BlockRule] = None) -> int:
    """Return the effective block length for ``n`` time points.

    Args:
        n (int): The number of time points.
        rule (BlockRule, optional): The block rule. Defaults to ``BlockRule()``.

    Returns:
        int: The block length, in ``[2, n - 1]``.

    Raises:
        InapplicableTestError: If ``n < 3``.

    """
    if n < MIN_TIMES:
        raise InapplicableTestError(f"At least {MIN_TIMES} time points are required, got {n}")
    rule = rule or BlockRule()

    if rule.override_b is not None:
        raw = rule.override_b
    else:
        # cbrt is exact on perfect cubes
        raw = math.floor(rule.c * float(np.cbrt(n)))

    b = min(max(raw, 2), n - 1)
    if b != raw:
        logger.debug("Block length %d clamped to %d for n=%d", raw, b, n)
    return b


def small_n_guarantee(n: int, rule: Optional[BlockRule] = None, alpha: float = 0.05, exceedances: int = 1) -> bool:
    """Return whether ``exceedances`` subsample statistics above T_n already force non-rejection.

    With ``m = n - b + 1`` subsample statistics, ``k`` of them exceeding T_n give a p-value of at
    least ``k / m``, so the null hypothesis cannot be rejected when ``k / m >= alpha``.

    Args:
        n (int): The number of time points.
        rule (BlockRule, optional): The block rule. Defaults to ``BlockRule()``.
        alpha (float, optional): The significance level. Defaults to 0.05.
        exceedances (int, optional): The number of exceeding subsample statistics. Defaults to 1.

    Returns:
        bool: True if the guarantee holds, False otherwise (including ``n < 3``).

    """
    if n < MIN_TIMES:
        return False
    b = block_length(n, rule)
    return exceedances / (n - b + 1) >= alpha
