"""Logging utilities."""

import logging
import sys

from colorlog import ColoredFormatter

LOG_FORMAT = "%(asctime)s %(levelname)-8s %(name)s: %(message)s"
"""Plain log line format."""

COLOR_LOG_FORMAT = "%(asctime)s %(log_color)s%(levelname)-8s%(reset)s %(name)s: %(message)s"
"""Log line format used in development mode."""

LOG_COLORS = {
    "DEBUG": "white",
    "INFO": "green",
    "WARNING": "yellow",
    "ERROR": "red",
    "CRITICAL": "red,bg_white",
}

EXCLUDED_LOGGERS: tuple[str, ...] = ("joblib", "matplotlib")


def setup_logging(name: str, log_level: str = "INFO", dev_mode: bool = False) -> logging.Logger:
    """Set up logging configuration.

    Log records go to stderr so that results written to stdout stay machine readable.

    Args:
        name (str): The name of the logger.
        log_level (str, optional): The log level. Defaults to "INFO".
        dev_mode (bool, optional): Whether to colourise the console output. Defaults to False.

    Returns:
        logging.Logger: The configured logger.

    """
    logger = logging.getLogger(name)
    logger.setLevel(log_level)

    handler = logging.StreamHandler(sys.stderr)
    if dev_mode:
        handler.setFormatter(ColoredFormatter(COLOR_LOG_FORMAT, reset=True, log_colors=LOG_COLORS, style="%"))
    else:
        handler.setFormatter(logging.Formatter(LOG_FORMAT))

    # replace handlers from an earlier call
    for existing in list(logger.handlers):
        logger.removeHandler(existing)
    logger.addHandler(handler)
    logger.propagate = False

    if log_level != "DEBUG":
        for excluded in EXCLUDED_LOGGERS:
            logging.getLogger(excluded).setLevel(logging.WARNING)

    return logger


class LoggerManager(logging.Manager):
    """Custom logger manager for error handling purposes.

    Sets the logger class for loggers created with this manager only.

    To set the logger class for all loggers, use `logging.setLoggerClass`.
    """

    def __init__(self, logger_class: type[logging.Logger] | None = None):
        super().__init__(logging.Logger.root)
        self.loggerClass = logger_class
