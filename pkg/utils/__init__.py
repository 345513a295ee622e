"""
Utility module package.

Provides logging management shared by the engine, the configuration layer
and the command line runner.
"""

from .logger import (
    LoggerManager,
    LogLevel,
    setup_logging,
    set_library_log_level,
    get_logger,
    logger,  # Default logger
)


__all__ = [
    "LoggerManager",
    "LogLevel",
    "setup_logging",
    "set_library_log_level",
    "get_logger",
    "logger",
]
