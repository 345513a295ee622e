"""
Configuration exceptions

Defines all configuration-related exceptions for better error handling.
"""

from typing import Optional


class ConfigError(Exception):
    """Base configuration exception"""
    pass


class ConfigValidationError(ConfigError):
    """Configuration validation exception

    Raised when configuration validation fails, such as missing required fields
    or invalid field values. `path` locates the offending value inside the
    experiment file as a JSON path (".box", ".multiplier.source.laurent_poles[0]").
    """

    def __init__(self, message: str, path: Optional[str] = None):
        self.path = path
        super().__init__(f"{path}: {message}" if path else message)


class ConfigSourceError(ConfigError):
    """Configuration source exception

    Raised when there are issues with configuration sources, such as
    type conversion failures or unreadable experiment files.
    """
    pass
