from __future__ import annotations

from dualpeel.config.initializer import (
    ConfigInitializer,
    InitResult,
    InitStatus,
    default_config_json,
    init_config,
)
from dualpeel.config.loader import ConfigFileReader, ConfigLoader, default_config, load_config
from dualpeel.config.models import (
    BenchConfig,
    ConfigError,
    DualpeelConfig,
    EnsembleConfig,
    SimulationConfig,
    SweepConfig,
)
from dualpeel.config.overrides import (
    CliOverrideProvider,
    ConfigMerger,
    EnvironmentOverrideProvider,
    EnvironmentSettings,
    environment_variable_names,
)
from dualpeel.config.paths import DEFAULT_CONFIG_PATH, ConfigPathProvider, get_config_path

__all__ = (
    "DEFAULT_CONFIG_PATH",
    "BenchConfig",
    "CliOverrideProvider",
    "ConfigError",
    "ConfigFileReader",
    "ConfigInitializer",
    "ConfigLoader",
    "ConfigMerger",
    "ConfigPathProvider",
    "DualpeelConfig",
    "EnsembleConfig",
    "EnvironmentOverrideProvider",
    "EnvironmentSettings",
    "InitResult",
    "InitStatus",
    "SimulationConfig",
    "SweepConfig",
    "default_config",
    "default_config_json",
    "environment_variable_names",
    "get_config_path",
    "init_config",
    "load_config",
)
