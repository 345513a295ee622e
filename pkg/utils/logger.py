"""
Logging for the engine and the batch runner.

Everything is written to stderr: the runner prints its tables and reports on
stdout (or to files), and those must stay byte-identical between runs.
"""

import logging
import sys
from enum import Enum
from typing import Any, Dict, Optional

ROOT_NAME = 'multipliers'


class LogLevel(Enum):
    DEBUG = logging.DEBUG
    INFO = logging.INFO
    WARNING = logging.WARNING
    ERROR = logging.ERROR
    CRITICAL = logging.CRITICAL

    @classmethod
    def from_name(cls, name: str) -> "LogLevel":
        """Case-insensitive lookup; 'warn' is accepted for WARNING."""
        key = name.strip().upper()
        if key == 'WARN':
            key = 'WARNING'
        try:
            return cls[key]
        except KeyError:
            raise ValueError(f"Unknown log level: {name}")


class LoggerManager:
    """One-time root configuration plus a registry of named loggers."""

    # Default format
    DETAILED_FORMAT = '[%(asctime)s][%(levelname)s][%(filename)s:%(lineno)d]: %(message)s'

    _configured = False
    _loggers: Dict[str, logging.Logger] = {}

    @classmethod
    def setup_logging(
        cls,
        level: LogLevel = LogLevel.INFO,
        format_string: Optional[str] = None,
        stream: Optional[Any] = None,
        force_reconfigure: bool = False
    ) -> None:
        """
        Configure the root logger once per process.

        Args:
            level: Initial level; --log-level changes it later through set_level
            format_string: Defaults to DETAILED_FORMAT
            stream: Defaults to sys.stderr
            force_reconfigure: Replace handlers installed by an earlier call
        """
        if cls._configured and not force_reconfigure:
            return
        logging.basicConfig(
            level=level.value,
            format=format_string or cls.DETAILED_FORMAT,
            stream=stream or sys.stderr,
            force=force_reconfigure,
        )
        cls._configured = True

    @classmethod
    def get_logger(cls, name: Optional[str] = None, level: Optional[LogLevel] = None) -> logging.Logger:
        name = name or ROOT_NAME
        if name not in cls._loggers:
            cls._loggers[name] = logging.getLogger(name)
        instance = cls._loggers[name]
        if level is not None:
            instance.setLevel(level.value)
        return instance

    @classmethod
    def set_level(cls, level: LogLevel) -> None:
        logging.getLogger().setLevel(level.value)

    @classmethod
    def set_library_log_level(cls, library_prefix: str, level: LogLevel) -> None:
        """Quiet (or open up) every registered logger whose name starts with the prefix."""
        for logger_name in logging.root.manager.loggerDict:
            if logger_name.startswith(library_prefix):
                logging.getLogger(logger_name).setLevel(level.value)

    @classmethod
    def reset_configuration(cls) -> None:
        cls._configured = False
        cls._loggers.clear()


def setup_logging(
    level: LogLevel = LogLevel.INFO,
    format_string: Optional[str] = None,
    stream: Optional[Any] = None,
    force_reconfigure: bool = False
) -> None:
    LoggerManager.setup_logging(level, format_string, stream, force_reconfigure)


def get_logger(name: Optional[str] = None, level: Optional[LogLevel] = None) -> logging.Logger:
    return LoggerManager.get_logger(name, level)


def set_library_log_level(library_prefix: str, level: LogLevel) -> None:
    LoggerManager.set_library_log_level(library_prefix, level)


# Shared engine logger
logger = get_logger(ROOT_NAME)
