"""Application settings module."""

from anovats.settings.analysis import ClusterSettings, TestSettings
from anovats.settings.app import AppSettings
from anovats.settings.base import SettingsBase, settings
from anovats.settings.experiments import PowerSettings, SizeSettings
from anovats.settings.load import load_config_file, load_settings
from anovats.settings.preprocess import PreprocessSettings
from anovats.settings.simulate import SimulateSettings

__all__ = [
    "AppSettings",
    "ClusterSettings",
    "PowerSettings",
    "PreprocessSettings",
    "SettingsBase",
    "SimulateSettings",
    "SizeSettings",
    "TestSettings",
    "load_config_file",
    "load_settings",
    "settings",
]
