"""Settings for the simulate subcommand."""

from typing import Optional

from pydantic import Field, ValidationError

from anovats.enumerations import Layout
from anovats.exceptions import ConfigurationError, SimulationError
from anovats.settings.app import AppSettings
from anovats.simgen.spec import DEFAULT_BURN_IN, ProcessSpec, process_preset


class SimulateSettings(AppSettings):
    """Settings for generating one simulated panel.

    A full ``process`` specification takes precedence over the numbered preset.

    """

    layout: Layout = Layout.WIDE
    process: Optional[ProcessSpec] = None
    preset: int = Field(default=1, ge=1, le=4)
    case: int = Field(default=1, ge=1, le=2)
    a: int = Field(default=4, ge=2)
    n: int = Field(default=20, ge=3)
    effects: Optional[list[float]] = None
    burn_in: int = Field(default=DEFAULT_BURN_IN, ge=100)

    def process_spec(self) -> ProcessSpec:
        """Return the configured process specification.

        Raises:
            ConfigurationError: If the preset options do not describe a valid process.

        """
        if self.process is not None:
            return self.process
        try:
            return process_preset(
                self.preset, self.case, self.a, self.n, effects=self.effects, burn_in=self.burn_in
            )
        except ValidationError as error:
            raise ConfigurationError(f"invalid process: {error.errors()[0]['msg']}") from error
        except SimulationError as error:
            raise ConfigurationError(f"invalid process: {error}") from error
