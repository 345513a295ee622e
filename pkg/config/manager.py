"""
Configuration manager

Merges the engine knobs from every source by priority and remembers which
source supplied each value, so a run can say where its settings came from.
"""

from threading import Lock
from typing import Any, Dict, List, NamedTuple, Optional

from .constants import CONFIG_METADATA, is_nullable_config, is_required_config
from .exceptions import ConfigValidationError
from .sources import ConfigSource, DefaultValueConfigSource, EnvironmentConfigSource
from utils import logger


class ResolvedValue(NamedTuple):
    value: Any
    origin: str


def _is_empty(value: Any) -> bool:
    return value is None or (isinstance(value, str) and not value.strip())


class ConfigManager:
    """Priority merge of configuration sources with a resolved-value cache"""

    def __init__(self, sources: Optional[List[ConfigSource]] = None):
        sources = list(sources) if sources is not None else [EnvironmentConfigSource(), DefaultValueConfigSource()]
        # Lower number wins
        self._sources = sorted(sources, key=lambda s: s.get_priority())
        self._resolved: Dict[str, ResolvedValue] = {}
        self._lock = Lock()
        self._loaded = False

    def _load(self) -> None:
        with self._lock:
            if self._loaded:
                return
            keys = list(CONFIG_METADATA)
            for source in self._sources:
                try:
                    values = source.get_values(keys)
                except Exception as e:
                    logger.warning(f"Skipping {source.label} settings: {e}")
                    continue
                for key, value in values.items():
                    if key not in self._resolved and not _is_empty(value):
                        self._resolved[key] = ResolvedValue(value, source.label)
            self._loaded = True
            logger.debug(f"Resolved {len(self._resolved)} engine settings from {len(self._sources)} sources")

    def get_config(self, keys: List[str]) -> Dict[str, Any]:
        """Values for `keys`; nullable keys nobody set map to None.

        Raises:
            ConfigValidationError: a required key has no value
        """
        self._load()
        result = {}
        with self._lock:
            for key in keys:
                if key in self._resolved:
                    result[key] = self._resolved[key].value
                elif is_nullable_config(key):
                    result[key] = None
        missing = [key for key in keys if is_required_config(key) and result.get(key) is None]
        if missing:
            raise ConfigValidationError(f"Missing required configuration: {missing}")
        return result

    def get_cached_value(self, key: str) -> Optional[Any]:
        self._load()
        with self._lock:
            entry = self._resolved.get(key)
        return entry.value if entry else None

    def origin(self, key: str) -> Optional[str]:
        """Label of the source that supplied `key`, None when no source did."""
        self._load()
        with self._lock:
            entry = self._resolved.get(key)
        return entry.origin if entry else None

    def describe(self) -> Dict[str, str]:
        """key -> "value (origin)" for every resolved key, sorted by key."""
        self._load()
        with self._lock:
            return {key: f"{entry.value} ({entry.origin})" for key, entry in sorted(self._resolved.items())}

    def clear_cache(self) -> None:
        with self._lock:
            self._resolved.clear()
            self._loaded = False

    def refresh_cache(self) -> None:
        """Re-read every source."""
        self.clear_cache()
        self._load()


# Environment and defaults only; the runner builds its own manager per run
config_manager = ConfigManager()
