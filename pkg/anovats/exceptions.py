"""Module for custom exceptions used in the app."""

__all__ = [
    "AnovatsError",
    "PanelError",
    "InapplicableTestError",
    "PreprocessError",
    "NonStationaryError",
    "SimulationError",
    "GarchExplosionError",
    "ConfigurationError",
]


class AnovatsError(Exception):
    """The AnovatsError class is the base exception for all data and analysis errors."""

    check: str = "anovats"
    """Name of the check that failed, echoed in CLI diagnostics."""

    def __init__(self, message: str, check: str | None = None):
        self.message = message
        if check is not None:
            self.check = check
        super().__init__(self.message)

    def __str__(self):
        """Return the message."""
        return self.message


class PanelError(AnovatsError):
    """Panel ingestion or data model error."""

    check = "panel"

    def __init__(self, message: str, row: int | None = None):
        self.row = row
        if row is not None:
            message = f"{message} (row {row})"
        super().__init__(message)


class InapplicableTestError(AnovatsError):
    """The homogeneity test cannot be applied to the given data."""

    check = "core"


class PreprocessError(AnovatsError):
    """Preprocessing error."""

    check = "preprocess"


class NonStationaryError(PreprocessError):
    """The fitted autoregressive model is not stationary."""


class SimulationError(AnovatsError):
    """Simulation error."""

    check = "simgen"


class GarchExplosionError(SimulationError):
    """The GARCH conditional variance left the finite positive range."""


class ConfigurationError(AnovatsError):
    """Invalid configuration."""

    check = "settings"
