"""
Configuration module

Multi-source configuration of the engine knobs (overrides, experiment file,
environment, defaults) and the type-safe models of experiment files.
"""

from .models import (
    EngineSettings,
    ExperimentConfig,
    read_experiment,
    render_location,
    to_complex,
)
from .manager import ConfigManager, config_manager
from .sources import (
    DefaultValueConfigSource,
    EnvironmentConfigSource,
    JsonFileConfigSource,
    OverrideConfigSource,
)
from .exceptions import ConfigError, ConfigValidationError, ConfigSourceError
from .constants import ConfigType, ConfigGroup, get_all_config_keys, CONFIG_METADATA

__all__ = [
    # Configuration Models
    'EngineSettings',
    'ExperimentConfig',
    'read_experiment',
    'render_location',
    'to_complex',

    # Configuration Manager
    'ConfigManager',
    'config_manager',

    # Sources
    'OverrideConfigSource',
    'JsonFileConfigSource',
    'EnvironmentConfigSource',
    'DefaultValueConfigSource',

    # Exceptions
    'ConfigError',
    'ConfigValidationError',
    'ConfigSourceError',

    # Constants
    'CONFIG_METADATA',
    'ConfigType',
    'ConfigGroup',
    'get_all_config_keys',
]
