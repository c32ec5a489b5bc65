"""Specifications of the simulated data-generating processes."""

__all__ = [
    "InnovationSpec",
    "ProcessSpec",
    "process_preset",
    "case_psi_matrix",
    "innovation_covariance",
    "DEFAULT_BURN_IN",
]

from typing import Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from anovats._types import FloatArray
from anovats.enumerations import Dependence, InnovationFamily, ProcessKind
from anovats.exceptions import SimulationError

DEFAULT_BURN_IN = 500
"""GARCH burn-in draws discarded before the output window."""
CASE1_PSI = 0.5
"""Diagonal of the independent-case coefficient matrix."""
CASE2_BLOCK = ((0.7, 0.0, 0.0), (0.0, -0.5, 0.0), (0.3, 0.1, 0.3))
"""Diagonal block of the correlated-case coefficient matrix."""
CASE2_CORRELATION = 0.5
"""Correlation of adjacent innovations in the correlated case."""


class InnovationSpec(BaseModel):
    """Distribution of the innovation vectors driving the disturbances."""

    model_config = ConfigDict(frozen=True)

    family: InnovationFamily = InnovationFamily.GAUSSIAN
    dependence: Dependence = Dependence.CASE1_INDEPENDENT
    dimension: int = Field(ge=1)
    """The number of groups a."""


def innovation_covariance(spec: InnovationSpec) -> FloatArray:
    """Return the innovation scale matrix: identity, or unit diagonal with 0.5 next to it."""
    covariance = np.eye(spec.dimension)
    if spec.dependence is Dependence.CASE2_CORRELATED:
        index = np.arange(spec.dimension - 1)
        covariance[index, index + 1] = CASE2_CORRELATION
        covariance[index + 1, index] = CASE2_CORRELATION
    return covariance


def case_psi_matrix(dependence: Dependence, a: int) -> FloatArray:
    """Return the coefficient matrix of a dependence case.

    Raises:
        SimulationError: If the correlated case is requested with ``a`` not divisible by 3.

    """
    if dependence is Dependence.CASE1_INDEPENDENT:
        return CASE1_PSI * np.eye(a)
    if a % 3 != 0:
        raise SimulationError(f"The correlated case needs a divisible by 3, got a={a}")
    return np.kron(np.eye(a // 3), np.asarray(CASE2_BLOCK))


class ProcessSpec(BaseModel):
    """A panel model ``z_it = mu + psi_i + e_it`` with MA(1) or GARCH disturbances ``e``."""

    model_config = ConfigDict(frozen=True)

    kind: ProcessKind = ProcessKind.MA1
    psi_matrix: list[list[float]]
    """The a x a coefficient matrix of the disturbance recursion."""
    innovation: InnovationSpec
    effects: list[list[float]]
    """The a x p group effects."""
    mu: list[float] = [0.0]
    """The common p-vector mean."""
    n: int = Field(ge=3)
    burn_in: int = Field(default=DEFAULT_BURN_IN, ge=100)
    noise_scale: float = Field(default=1.0, ge=0)
    """Multiplies the disturbances; 0 gives a noiseless panel."""

    @field_validator("effects", mode="before")
    @classmethod
    def validate_effects(cls, value):
        """Accept a flat list of effects as a univariate column."""
        if value and not isinstance(value[0], (list, tuple, np.ndarray)):
            return [[float(v)] for v in value]
        return value

    @model_validator(mode="after")
    def validate_dimensions(self) -> "ProcessSpec":
        """Validate that the matrices agree with the number of groups and coordinates."""
        a = self.innovation.dimension
        psi = np.asarray(self.psi_matrix, dtype=np.float64)
        if psi.shape != (a, a):
            raise ValueError(f"psi_matrix must be {a}x{a}, got {psi.shape}")
        effects = np.asarray(self.effects, dtype=np.float64)
        if effects.ndim != 2 or effects.shape[0] != a:
            raise ValueError(f"effects must have {a} rows, got shape {effects.shape}")
        if effects.shape[1] != len(self.mu):
            raise ValueError(f"mu has {len(self.mu)} coordinates, effects have {effects.shape[1]}")
        return self

    @property
    def num_groups(self) -> int:
        """The number of groups a."""
        return self.innovation.dimension

    @property
    def dim(self) -> int:
        """The number of coordinates p."""
        return len(self.mu)

    @property
    def psi(self) -> FloatArray:
        """The coefficient matrix as an array."""
        return np.asarray(self.psi_matrix, dtype=np.float64)


PRESETS: dict[int, tuple[ProcessKind, InnovationFamily]] = {
    1: (ProcessKind.MA1, InnovationFamily.GAUSSIAN),
    2: (ProcessKind.MA1, InnovationFamily.STUDENT_T5),
    3: (ProcessKind.MA1, InnovationFamily.SKEW_NORMAL_50),
    4: (ProcessKind.GARCH, InnovationFamily.GAUSSIAN),
}
"""Process number to disturbance kind and innovation family."""


def process_preset(
    process: int,
    case: int | Dependence,
    a: int,
    n: int,
    effects: Optional[list[float]] = None,
    burn_in: int = DEFAULT_BURN_IN,
) -> ProcessSpec:
    """Return the specification of a numbered simulation process.

    Processes 1 to 3 are MA(1) with Gaussian, t5 and skew-normal innovations; process 4 is
    GARCH with Gaussian innovations. Case 1 has independent groups, case 2 correlated ones.

    Args:
        process (int): The process number, 1 to 4.
        case (int | Dependence): The dependence case, 1 or 2.
        a (int): The number of groups.
        n (int): The number of time points.
        effects (list[float], optional): The group effects. Defaults to all zero.
        burn_in (int, optional): The GARCH burn-in. Defaults to 500.

    Returns:
        ProcessSpec: The specification, with ``mu = 0`` and ``p = 1``.

    Raises:
        SimulationError: If the process or case is unknown, or case 2 has ``a % 3 != 0``.

    """
    if process not in PRESETS:
        raise SimulationError(f"Unknown process {process}; expected one of {sorted(PRESETS)}")
    if isinstance(case, Dependence):
        dependence = case
    elif case in (1, 2):
        dependence = Dependence.CASE1_INDEPENDENT if case == 1 else Dependence.CASE2_CORRELATED
    else:
        raise SimulationError(f"Unknown case {case}; expected 1 or 2")

    kind, family = PRESETS[process]
    effects = effects if effects is not None else [0.0] * a
    return ProcessSpec(
        kind=kind,
        psi_matrix=case_psi_matrix(dependence, a).tolist(),
        innovation=InnovationSpec(family=family, dependence=dependence, dimension=a),
        effects=[[float(value)] for value in effects],
        mu=[0.0],
        n=n,
        burn_in=burn_in,
    )
