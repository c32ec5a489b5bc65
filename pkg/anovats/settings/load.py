"""Module for loading configuration settings for the app."""

from pathlib import Path
from typing import Type, TypeVar

import yaml
from pydantic import ValidationError

from anovats._types import StrPath
from anovats.exceptions import ConfigurationError
from anovats.settings.app import AppSettings

SUPPORTED_FILE_TYPES = ".yml", ".yaml"
"""Supported file types for the config file."""


T = TypeVar("T", bound=AppSettings)


def load_settings(settings_object: Type[T], config_path: StrPath | None = None, **overrides) -> T:
    """Load settings from a configuration file, then apply command-line overrides.

    Args:
        settings_object (Type[T]): The type of the settings object to be loaded.
        config_path (StrPath | None, optional): The path of the YAML configuration file.
            Defaults to None.
        **overrides: Values that take precedence over the file; None values are ignored.

    Returns:
        T: The loaded settings object.

    Raises:
        ConfigurationError: If the file cannot be read or a value is invalid.
        NotImplementedError: If the file is not YAML.

    """
    try:
        obj = settings_object()
        if config_path is not None:
            obj.load(**load_config_file(config_path))
        obj.load(**overrides)
    except ValidationError as error:
        details = "; ".join(
            f"{'.'.join(str(part) for part in e['loc']) or 'settings'}: {e['msg']}" for e in error.errors()
        )
        raise ConfigurationError(f"invalid configuration: {details}") from error
    except ValueError as error:
        raise ConfigurationError(f"invalid configuration: {error}") from error
    return obj


def load_config_file(config_path: StrPath) -> dict:
    """Load a YAML configuration file.

    Args:
        config_path (StrPath): The path of the configuration file.

    Returns:
        dict: The parsed configuration data; empty for an empty file.

    Raises:
        ConfigurationError: If the file is missing, unreadable or not a mapping.
        NotImplementedError: If the file type is not supported (only YAML files are supported).

    """
    path = Path(config_path)

    if path.suffix.lower() not in SUPPORTED_FILE_TYPES:
        raise NotImplementedError("Only YAML files are supported")

    try:
        with open(path, "r", encoding="utf-8") as file:
            config = yaml.safe_load(file)
    except FileNotFoundError as error:
        raise ConfigurationError(f"config file not found: {path}") from error
    except yaml.YAMLError as error:
        raise ConfigurationError(f"config file {path} is not valid YAML: {error}") from error

    if config is None:
        return {}
    if not isinstance(config, dict):
        raise ConfigurationError(f"config file {path} must hold a mapping")
    return config
