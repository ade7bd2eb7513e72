"""Runtime configuration read from the environment (.env supported)"""

import os
import logging
from dataclasses import dataclass
from typing import Optional

from dotenv import load_dotenv

from utils.errors import ConfigError

# Load environment variables
load_dotenv()

logger = logging.getLogger(__name__)

DEFAULT_BUDGET = 1 << 24
DEFAULT_CHUNK = 1 << 16
LOG_LEVELS = ('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL')


def _int_env(name: str, default: int, minimum: int = 0) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == '':
        return default
    try:
        value = int(raw.strip(), 0)
    except ValueError:
        raise ConfigError(f"{name} must be an integer, got {raw!r}", variable=name)
    if value < minimum:
        raise ConfigError(f"{name} must be >= {minimum}, got {value}", variable=name)
    return value


@dataclass(frozen=True)
class Settings:
    """Knobs shared by the enumeration kernels and the CLI"""

    budget: int = DEFAULT_BUDGET
    chunk_size: int = DEFAULT_CHUNK
    seed: int = 0
    log_level: str = 'WARNING'

    @classmethod
    def from_env(cls) -> "Settings":
        """Build settings from HERMLCD_* environment variables"""
        level = os.getenv('HERMLCD_LOG_LEVEL', 'WARNING').strip().upper()
        if level not in LOG_LEVELS:
            raise ConfigError(f"HERMLCD_LOG_LEVEL must be one of {', '.join(LOG_LEVELS)}",
                              variable='HERMLCD_LOG_LEVEL')
        return cls(
            budget=_int_env('HERMLCD_BUDGET', DEFAULT_BUDGET, minimum=1),
            chunk_size=_int_env('HERMLCD_CHUNK', DEFAULT_CHUNK, minimum=1),
            seed=_int_env('HERMLCD_SEED', 0),
            log_level=level,
        )

    def with_overrides(self, budget: Optional[int] = None, seed: Optional[int] = None) -> "Settings":
        """Return a copy with command-line overrides applied"""
        return Settings(
            budget=self.budget if budget is None else budget,
            chunk_size=self.chunk_size,
            seed=self.seed if seed is None else seed,
            log_level=self.log_level,
        )


_settings: Optional[Settings] = None


def get_settings() -> Settings:
    """Process-wide settings, read once from the environment"""
    global _settings
    if _settings is None:
        _settings = Settings.from_env()
        logger.debug(f"Loaded settings: {_settings}")
    return _settings


def reload_settings() -> Settings:
    """Drop the cached settings and read the environment again"""
    global _settings
    _settings = None
    return get_settings()
