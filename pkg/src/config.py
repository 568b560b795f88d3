"""
Runtime settings, read from the environment (and .env when present)
"""

import logging
from dataclasses import dataclass
from os import getenv
from pathlib import Path
from typing import Optional

from dotenv import load_dotenv

logger = logging.getLogger(__name__)

ENV_PATH = Path(__file__).parent.parent / '.env'

# Exhaustive verification enumerates 2^(2n) pairs; beyond this it is impractical
EXHAUSTIVE_CEILING = 12


@dataclass(frozen=True)
class Settings:
    log_level: str = 'INFO'
    verify_seed: int = 20100101
    verify_random_pairs: int = 100_000
    verify_exhaustive_max_n: int = EXHAUSTIVE_CEILING
    verify_workers: int = 1
    verify_block_rows: int = 256


def _int_setting(name: str, default: int, minimum: int) -> int:
    raw = getenv(name)
    if raw is None or not raw.strip():
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}")
    if value < minimum:
        raise ValueError(f"{name} must be >= {minimum}, got {value}")
    return value


def load_settings(env_path: Optional[Path] = None) -> Settings:
    """
    Build Settings from environment variables.

    Args:
        env_path: .env file to load first; defaults to the project root .env

    Returns:
        Immutable Settings instance
    """
    env_path = env_path or ENV_PATH
    if env_path.exists():
        load_dotenv(env_path)
        logger.debug("Loaded settings from %s", env_path)

    exhaustive_max = _int_setting('VERIFY_EXHAUSTIVE_MAX_N', EXHAUSTIVE_CEILING, 1)
    if exhaustive_max > EXHAUSTIVE_CEILING:
        raise ValueError(f"VERIFY_EXHAUSTIVE_MAX_N cannot exceed {EXHAUSTIVE_CEILING}")

    return Settings(
        log_level=getenv('LOG_LEVEL', 'INFO').upper(),
        verify_seed=_int_setting('VERIFY_SEED', 20100101, 0),
        verify_random_pairs=_int_setting('VERIFY_RANDOM_PAIRS', 100_000, 1),
        verify_exhaustive_max_n=exhaustive_max,
        verify_workers=_int_setting('VERIFY_WORKERS', 1, 1),
        verify_block_rows=_int_setting('VERIFY_BLOCK_ROWS', 256, 1),
    )
