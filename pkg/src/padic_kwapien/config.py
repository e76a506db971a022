"""
Configuration management for padic-kwapien.
"""

import logging
import os
import sys
from pathlib import Path
from typing import Any

LOGGER = logging.getLogger(__name__)

CONFIG_ENV_VAR = "PADIC_KWAPIEN_CONFIG"


def get_defaults() -> dict[str, Any]:
    return {
        "max_grid_size": 3**10,
        "fast_dft_threshold": 64,
        "dft_backend": "auto",
        "max_optimizer_params": 4096,
        "default_restarts": 32,
        "default_iterations": 2000,
        "gradient_step": 1e-6,
        "initial_step_size": 0.1,
        "polish_iterations": 200,
        "khinchin_max_vectors": 20,
        "workers": 1,
        "output_format": "json",
    }


def get_config_path() -> Path:
    override = os.environ.get(CONFIG_ENV_VAR)
    if override:
        return Path(override)
    return Path.home() / ".padic-kwapien-config"


def load_config(config_path: Path | None = None) -> dict[str, Any]:
    config_path = config_path or get_config_path()
    defaults = get_defaults()

    if not config_path.exists():
        return defaults

    try:
        if sys.version_info >= (3, 11):
            import tomllib

            with open(config_path, "rb") as f:
                user_config = tomllib.load(f)
        else:
            import toml

            user_config = toml.load(config_path)
    except (OSError, ValueError) as exc:
        LOGGER.warning("Ignoring unreadable config file %s: %s", config_path, exc)
        return defaults

    unknown = sorted(set(user_config) - set(defaults))
    if unknown:
        LOGGER.warning("Unknown config keys in %s: %s", config_path, ", ".join(unknown))

    defaults.update(user_config)
    return defaults


_config: dict[str, Any] | None = None


def get_config() -> dict[str, Any]:
    global _config
    if _config is None:
        _config = load_config()
    return _config


def set_config_path(config_path: Path) -> None:
    """Load configuration from an explicit file, replacing the cached one."""
    global _config
    _config = load_config(config_path)


def reset_config() -> None:
    global _config
    _config = None
