from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from enum import StrEnum
from pathlib import Path

from pydantic import ValidationError

from dualpeel.config.loader import ConfigFileReader, default_config
from dualpeel.config.models import ConfigError, DualpeelConfig
from dualpeel.config.overrides import ConfigMerger
from dualpeel.config.paths import ConfigPathProvider

logger = logging.getLogger(__name__)


class InitStatus(StrEnum):
    created = "Created"
    replaced = "Replaced with defaults"
    valid = "Existing file is valid"


@dataclass(frozen=True, slots=True)
class InitResult:
    path: Path
    status: InitStatus


@dataclass(frozen=True, kw_only=True, slots=True)
class ConfigInitializer:
    """Write the default dualpeel config, or vet the one already on disk.

    An existing file is merged over the defaults and validated, so a partial
    file that only sets e.g. ``ensemble.n`` is accepted while a typo in a
    section name is reported. ``force`` replaces it with the defaults.
    """

    path_provider: ConfigPathProvider = field(default_factory=ConfigPathProvider)
    file_reader: ConfigFileReader = field(default_factory=ConfigFileReader)
    merger: ConfigMerger = field(default_factory=ConfigMerger)

    def init(self, *, config_path: Path | None = None, force: bool = False) -> InitResult:
        """Create, replace or validate the config file.

        Raises:
            ConfigError: If an existing file is kept and does not validate.

        """
        resolved_path = config_path or self.path_provider.path()
        existed = resolved_path.exists()
        if existed and not force:
            self._validate_existing(resolved_path)
            return InitResult(resolved_path, InitStatus.valid)
        resolved_path.parent.mkdir(parents=True, exist_ok=True)
        resolved_path.write_text(default_config_json(), encoding="utf-8")
        logger.info("Wrote default config to %s", resolved_path)
        return InitResult(resolved_path, InitStatus.replaced if existed else InitStatus.created)

    def _validate_existing(self, config_path: Path) -> None:
        payload = self.merger.deep_merge(
            default_config().model_dump(),
            self.file_reader.read(config_path),
        )
        try:
            DualpeelConfig.model_validate(payload)
        except ValidationError as exc:
            raise ConfigError(f"Existing config {config_path} is invalid: {exc}") from exc


def default_config_json() -> str:
    return json.dumps(default_config().model_dump(mode="json"), indent=2) + "\n"


def init_config(*, config_path: Path | None = None, force: bool = False) -> Path:
    return ConfigInitializer().init(config_path=config_path, force=force).path
