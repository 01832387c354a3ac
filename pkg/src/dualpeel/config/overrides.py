from __future__ import annotations

from dataclasses import dataclass, fields
from typing import Any, Literal, TypeAlias, cast

from pydantic_settings import BaseSettings, SettingsConfigDict

ConfigPayload: TypeAlias = dict[str, Any]
SectionName: TypeAlias = Literal["simulation", "ensemble", "sweep", "bench"]

SIMULATION_SECTION: SectionName = "simulation"
ENSEMBLE_SECTION: SectionName = "ensemble"
SWEEP_SECTION: SectionName = "sweep"
BENCH_SECTION: SectionName = "bench"
SECTIONS: tuple[SectionName, ...] = (
    SIMULATION_SECTION,
    ENSEMBLE_SECTION,
    SWEEP_SECTION,
    BENCH_SECTION,
)

ENV_PREFIX = "DUALPEEL_"


class EnvironmentSettings(BaseSettings):
    """``DUALPEEL_*`` variables; unset ones stay ``None`` and leave the config alone."""

    model_config = SettingsConfigDict(env_prefix=ENV_PREFIX, frozen=True)

    seed: int | None = None
    trials: int | None = None
    erasure_prob: float | None = None
    tie_break: str | None = None
    output_format: str | None = None
    ensemble_n: int | None = None
    ensemble_dv: int | None = None
    ensemble_dc: int | None = None


ENVIRONMENT_TARGETS: dict[str, tuple[SectionName, str]] = {
    "seed": (SIMULATION_SECTION, "seed"),
    "trials": (SIMULATION_SECTION, "trials"),
    "erasure_prob": (SIMULATION_SECTION, "erasure_prob"),
    "tie_break": (SIMULATION_SECTION, "tie_break"),
    "output_format": (SIMULATION_SECTION, "output_format"),
    "ensemble_n": (ENSEMBLE_SECTION, "n"),
    "ensemble_dv": (ENSEMBLE_SECTION, "dv"),
    "ensemble_dc": (ENSEMBLE_SECTION, "dc"),
}


def environment_variable_names() -> tuple[str, ...]:
    return tuple(f"{ENV_PREFIX}{setting_name.upper()}" for setting_name in ENVIRONMENT_TARGETS)


@dataclass(frozen=True, slots=True)
class EnvironmentOverrideProvider:
    """Build overrides from DUALPEEL_* environment variables.

    Raises:
        pydantic.ValidationError: From ``overrides`` when a variable cannot be cast.

    """

    settings_class: type[EnvironmentSettings] = EnvironmentSettings

    def overrides(self) -> ConfigPayload:
        """Return environment overrides grouped by config section."""
        settings = self.settings_class()
        override_payload = _empty_override_payload()
        for setting_name, (section_name, setting_key) in ENVIRONMENT_TARGETS.items():
            setting_value = getattr(settings, setting_name)
            if setting_value is None:
                continue
            cast(ConfigPayload, override_payload[section_name])[setting_key] = setting_value
        return override_payload


CLI_TARGETS: dict[str, tuple[SectionName, str]] = {
    "seed": (SIMULATION_SECTION, "seed"),
    "trials": (SIMULATION_SECTION, "trials"),
    "erasure_prob": (SIMULATION_SECTION, "erasure_prob"),
    "tie_break": (SIMULATION_SECTION, "tie_break"),
    "output_format": (SIMULATION_SECTION, "output_format"),
    "record_timing": (SIMULATION_SECTION, "record_timing"),
    "n": (ENSEMBLE_SECTION, "n"),
    "dv": (ENSEMBLE_SECTION, "dv"),
    "dc": (ENSEMBLE_SECTION, "dc"),
    "ensemble_seed": (ENSEMBLE_SECTION, "seed"),
    "grid": (SWEEP_SECTION, "grid"),
    "target_success": (SWEEP_SECTION, "target_success"),
    "min_exp": (BENCH_SECTION, "min_exp"),
    "max_exp": (BENCH_SECTION, "max_exp"),
    "repeats": (BENCH_SECTION, "repeats"),
}


@dataclass(frozen=True, kw_only=True, slots=True)
class CliOverrideProvider:
    """Build overrides passed by CLI command flags."""

    seed: int | None = None
    trials: int | None = None
    erasure_prob: float | None = None
    tie_break: str | None = None
    output_format: str | None = None
    record_timing: bool | None = None
    n: int | None = None
    dv: int | None = None
    dc: int | None = None
    ensemble_seed: int | None = None
    grid: list[float] | None = None
    target_success: float | None = None
    min_exp: int | None = None
    max_exp: int | None = None
    repeats: int | None = None

    def overrides(self) -> ConfigPayload:
        """Return CLI overrides grouped by config section."""
        override_payload = _empty_override_payload()
        for flag in fields(self):
            flag_value = getattr(self, flag.name)
            if flag_value is None:
                continue
            section_name, setting_key = CLI_TARGETS[flag.name]
            cast(ConfigPayload, override_payload[section_name])[setting_key] = flag_value
        return override_payload


@dataclass(frozen=True, slots=True)
class ConfigMerger:
    """Merge nested config dictionaries while ignoring empty override sections."""

    def deep_merge(
        self,
        base_payload: ConfigPayload,
        override_payload: ConfigPayload,
    ) -> ConfigPayload:
        """Return a recursively merged config payload."""
        merged_payload = dict(base_payload)
        for setting_key, override_value in override_payload.items():
            existing_value = merged_payload.get(setting_key)
            if self._can_merge(override_value, existing_value):
                merged_payload[setting_key] = self.deep_merge(
                    cast(ConfigPayload, existing_value),
                    override_value,
                )
            elif override_value is not None and override_value != {}:
                merged_payload[setting_key] = override_value
        return merged_payload

    def _can_merge(self, override_value: Any, existing_value: Any) -> bool:
        return isinstance(override_value, dict) and isinstance(existing_value, dict)


def _empty_override_payload() -> ConfigPayload:
    return {section_name: {} for section_name in SECTIONS}
