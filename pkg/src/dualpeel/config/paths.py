from __future__ import annotations

import os
from dataclasses import dataclass
from pathlib import Path

DEFAULT_CONFIG_PATH = Path("~/.dualpeel/config.json")
CONFIG_ENV_NAME = "DUALPEEL_CONFIG"


@dataclass(frozen=True, slots=True)
class ConfigPathProvider:
    """Resolve the dualpeel config file location."""

    env_name: str = CONFIG_ENV_NAME
    default_path: Path = DEFAULT_CONFIG_PATH

    def path(self) -> Path:
        """Return the effective config path."""
        configured_path = os.environ.get(self.env_name)
        if configured_path:
            return Path(configured_path).expanduser()
        return self.default_path.expanduser()


def get_config_path() -> Path:
    return ConfigPathProvider().path()
