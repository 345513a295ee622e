"""
Configuration sources

Implements the abstract configuration source interface and concrete sources for
command line overrides, the "settings" block of an experiment file, environment
variables (with .env support) and metadata defaults.
"""

import os
from abc import ABC, abstractmethod
from typing import Dict, Any, Optional

from dotenv import load_dotenv

from .constants import CONFIG_METADATA, ConfigType
from .exceptions import ConfigSourceError
from utils import logger


class ConfigSource(ABC):
    """Abstract configuration source interface"""

    # Shown next to each knob when the merged settings are logged
    label: str = "source"

    @abstractmethod
    def get_values(self, keys: list[str]) -> Dict[str, Any]:
        """Get configuration values for the specified keys

        Args:
            keys: List of configuration keys to retrieve

        Returns:
            Dictionary mapping keys to their values
        """
        pass

    @abstractmethod
    def get_priority(self) -> int:
        """Get source priority (lower number = higher priority)"""
        pass


def _convert_value(key: str, value: Any) -> Any:
    """Convert a raw value to the type declared in the metadata"""
    metadata = CONFIG_METADATA.get(key, {})
    config_type = metadata.get('type', ConfigType.STRING)

    try:
        if config_type == ConfigType.INTEGER:
            return int(value)
        elif config_type == ConfigType.FLOAT:
            return float(value)
        elif config_type == ConfigType.BOOLEAN:
            if isinstance(value, bool):
                return value
            return str(value).lower() in ('true', '1', 'yes', 'on')
        else:  # STRING
            return str(value)
    except (ValueError, TypeError) as e:
        raise ConfigSourceError(f"Type conversion failed for {key}={value}: {e}")


class _MappingConfigSource(ConfigSource):
    """Values from an in-memory mapping, converted per metadata"""

    def __init__(self, values: Optional[Dict[str, Any]] = None):
        self._values = dict(values or {})

    def get_values(self, keys: list[str]) -> Dict[str, Any]:
        result = {}
        for key in keys:
            if key not in self._values or self._values[key] is None:
                continue
            result[key] = _convert_value(key, self._values[key])
        unknown = sorted(set(self._values) - set(CONFIG_METADATA))
        if unknown:
            logger.warning(f"Unknown configuration keys ignored: {unknown}")
        return result


class OverrideConfigSource(_MappingConfigSource):
    """Command line overrides (highest priority)"""
    label = "command line"

    def get_priority(self) -> int:
        return 1


class JsonFileConfigSource(_MappingConfigSource):
    """The "settings" object of an experiment file"""
    label = "experiment file"

    def get_priority(self) -> int:
        return 10


class EnvironmentConfigSource(ConfigSource):
    """Environment variables configuration source"""
    label = "environment"

    def __init__(self, dotenv_path: Optional[str] = None):
        # .env values never override variables already set in the process
        load_dotenv(dotenv_path=dotenv_path, override=False)

    def get_priority(self) -> int:
        return 100

    def get_values(self, keys: list[str]) -> Dict[str, Any]:
        """Get configuration values from environment variables"""
        result = {}

        for key in keys:
            if key not in CONFIG_METADATA:
                logger.warning(f"Unknown configuration key: {key}")
                continue

            metadata = CONFIG_METADATA[key]
            env_key = metadata.get('env_key')

            if env_key and (env_value := os.environ.get(env_key)):
                try:
                    result[key] = _convert_value(key, env_value)
                    logger.debug(f"Retrieved {key} from environment variable {env_key}")
                except ConfigSourceError as e:
                    logger.error(f"Failed to convert environment variable {env_key}: {e}")

        return result


class DefaultValueConfigSource(ConfigSource):
    """Default values configuration source (lowest priority)"""
    label = "default"

    def get_priority(self) -> int:
        return 1000

    def get_values(self, keys: list[str]) -> Dict[str, Any]:
        """Get default values for configuration keys"""
        result = {}

        for key in keys:
            metadata = CONFIG_METADATA.get(key, {})
            if 'default' in metadata:
                result[key] = metadata['default']

        return result
