"""Assembly of simulated panels from a process specification."""

__all__ = ["assemble_panel", "centred_effects"]

import numpy as np

from anovats._types import FloatArray
from anovats.enumerations import ProcessKind
from anovats.panel.model import CompletePanel
from anovats.simgen.processes import gen_garch, gen_ma1
from anovats.simgen.rng import RngStream, as_generator
from anovats.simgen.spec import ProcessSpec


def centred_effects(spec: ProcessSpec) -> FloatArray:
    """Return the ``(a, p)`` group effects re-centred to sum to zero over the groups."""
    effects = np.asarray(spec.effects, dtype=np.float64)
    return effects - effects.mean(axis=0, keepdims=True)


def assemble_panel(
    process: ProcessSpec,
    rng: RngStream | np.random.Generator,
    labels: list[str] | None = None,
) -> CompletePanel:
    """Generate a panel ``z_it = mu + psi_i + e_it``.

    Args:
        process (ProcessSpec): The process specification.
        rng (RngStream | np.random.Generator): The random stream.
        labels (list[str], optional): Group labels. Defaults to ``Area_1`` to ``Area_a``.

    Returns:
        CompletePanel: The ``(a, n, p)`` panel.

    """
    generator = as_generator(rng)
    a, n, p = process.num_groups, process.n, process.dim
    if process.kind is ProcessKind.MA1:
        disturbances = gen_ma1(process, generator)
    else:
        disturbances = gen_garch(process, generator)

    # (n, p * a) -> (a, n, p)
    noise = disturbances.reshape(n, p, a).transpose(2, 0, 1)
    mean = np.asarray(process.mu)[np.newaxis, np.newaxis, :] + centred_effects(process)[:, np.newaxis, :]
    values = mean + process.noise_scale * noise

    return CompletePanel(
        values=values,
        labels=labels or [f"Area_{i + 1}" for i in range(a)],
        time_index=[str(t + 1) for t in range(n)],
    )
