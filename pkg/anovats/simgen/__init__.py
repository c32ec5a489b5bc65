"""Module providing the simulation data-generating processes."""

__all__ = [
    "InnovationSpec",
    "ProcessSpec",
    "RngStream",
    "process_preset",
    "draw_innovations",
    "gen_ma1",
    "gen_garch",
    "assemble_panel",
]

from anovats.simgen.assemble import assemble_panel
from anovats.simgen.innovations import draw_innovations
from anovats.simgen.processes import gen_garch, gen_ma1
from anovats.simgen.rng import RngStream
from anovats.simgen.spec import InnovationSpec, ProcessSpec, process_preset
