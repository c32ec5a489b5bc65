"""Common type aliases for the anovats package."""

from os import PathLike
from typing import Callable, TypeAlias

import numpy as np
import numpy.typing as npt

FloatArray: TypeAlias = npt.NDArray[np.float64]
"""A double precision numpy array."""

BoolArray: TypeAlias = npt.NDArray[np.bool_]
"""A boolean numpy array."""

StrPath: TypeAlias = str | PathLike[str]

AlphaSchedule: TypeAlias = Callable[[int, int, int], float]
"""A per-node significance level, called with (depth, node size, number of time points)."""

