from __future__ import annotations

import json
from pathlib import Path

import pytest

from dualpeel.config import (
    DEFAULT_CONFIG_PATH,
    CliOverrideProvider,
    ConfigError,
    ConfigInitializer,
    ConfigMerger,
    EnvironmentOverrideProvider,
    EnvironmentSettings,
    InitStatus,
    default_config,
    environment_variable_names,
    get_config_path,
    init_config,
    load_config,
)
from dualpeel.core.iterative import TieBreak
from dualpeel.sim import ExperimentKind, OutputFormat


@pytest.fixture(autouse=True)
def isolated_environment(monkeypatch: pytest.MonkeyPatch) -> None:
    for env_name in environment_variable_names():
        monkeypatch.delenv(env_name, raising=False)
    monkeypatch.delenv("DUALPEEL_CONFIG", raising=False)


def test_default_config_shape() -> None:
    config = default_config()

    assert config.model_dump(mode="json") == {
        "simulation": {
            "trials": 100,
            "seed": 0,
            "erasure_prob": 0.3,
            "tie_break": "zeros",
            "output_format": "csv",
            "confidence": 0.95,
            "record_timing": False,
            "exact_rank_max_n": 4096,
        },
        "ensemble": {"n": 1024, "dv": 3, "dc": 6, "seed": 0},
        "sweep": {"grid": [0.5, 0.55, 0.6, 0.65, 0.7, 0.75, 0.8], "target_success": 0.99},
        "bench": {"min_exp": 12, "max_exp": 17, "repeats": 3, "erasure_prob": 0.3},
    }


def test_default_config_converts_to_experiment_settings() -> None:
    config = default_config()

    decode = config.to_sim_config(ExperimentKind.decode, code=config.code_spec())
    bench = config.to_sim_config(ExperimentKind.bench, code=config.code_spec())
    duality = config.to_sim_config(
        ExperimentKind.duality,
        code=config.code_spec(dist="3:1/6:1"),
        exhaustive=True,
    )

    assert decode.code.label == "(3,6)-regular n=1024"
    assert decode.grid == (0.5, 0.55, 0.6, 0.65, 0.7, 0.75, 0.8)
    assert decode.erasure_prob == pytest.approx(0.3)
    assert bench.min_exp == 12
    assert duality.exhaustive
    assert duality.code.dist == "3:1/6:1"


def test_config_path_env_and_init(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> None:
    path = tmp_path / "custom" / "config.json"

    assert get_config_path() == DEFAULT_CONFIG_PATH.expanduser()
    monkeypatch.setenv("DUALPEEL_CONFIG", str(path))

    assert get_config_path() == path
    assert init_config() == path
    assert json.loads(path.read_text(encoding="utf-8")) == default_config().model_dump(mode="json")
    path.write_text(json.dumps({"ensemble": {"n": 64}}), encoding="utf-8")
    assert init_config() == path
    assert load_config().ensemble.n == 64


def test_load_config_precedence(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> None:
    path = tmp_path / "config.json"
    path.write_text(
        json.dumps(
            {
                "simulation": {"trials": 10, "seed": 3, "erasure_prob": 0.1},
                "ensemble": {"n": 96, "dv": 3, "dc": 6},
                "sweep": {"grid": [0.6, 0.7]},
            },
        ),
        encoding="utf-8",
    )
    monkeypatch.setenv("DUALPEEL_TRIALS", "20")
    monkeypatch.setenv("DUALPEEL_ERASURE_PROB", "0.25")
    monkeypatch.setenv("DUALPEEL_TIE_BREAK", "random")
    monkeypatch.setenv("DUALPEEL_ENSEMBLE_N", "48")

    config = load_config(
        config_path=path,
        cli_overrides=CliOverrideProvider(trials=30, n=24, seed=0, record_timing=False),
    )

    assert config.simulation.trials == 30
    assert config.simulation.seed == 0
    assert config.simulation.erasure_prob == pytest.approx(0.25)
    assert config.simulation.tie_break is TieBreak.random
    assert config.simulation.output_format is OutputFormat.csv
    assert config.simulation.record_timing is False
    assert config.ensemble.n == 24
    assert config.sweep.grid == [0.6, 0.7]
    assert config.sweep.target_success == pytest.approx(0.99)


def test_cli_overrides_reach_every_section() -> None:
    overrides = CliOverrideProvider(
        grid=[0.4],
        target_success=0.9,
        min_exp=3,
        max_exp=5,
        repeats=2,
        ensemble_seed=7,
        output_format="json",
    ).overrides()

    assert overrides == {
        "simulation": {"output_format": "json"},
        "ensemble": {"seed": 7},
        "sweep": {"grid": [0.4], "target_success": 0.9},
        "bench": {"min_exp": 3, "max_exp": 5, "repeats": 2},
    }
    assert CliOverrideProvider().overrides() == {
        "simulation": {},
        "ensemble": {},
        "sweep": {},
        "bench": {},
    }


def test_environment_fields_cast_values(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("DUALPEEL_SEED", "12")
    monkeypatch.setenv("DUALPEEL_OUTPUT_FORMAT", "json")

    overrides = EnvironmentOverrideProvider().overrides()

    assert overrides["simulation"] == {"seed": 12, "output_format": "json"}
    assert overrides["ensemble"] == {}
    assert EnvironmentSettings().trials is None
    assert "DUALPEEL_ENSEMBLE_DV" in environment_variable_names()


def test_invalid_config_errors(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> None:
    invalid = tmp_path / "invalid.json"
    invalid.write_text("{bad", encoding="utf-8")
    with pytest.raises(ConfigError, match="Invalid JSON"):
        load_config(config_path=invalid)

    non_object = tmp_path / "array.json"
    non_object.write_text("[]", encoding="utf-8")
    with pytest.raises(ConfigError, match="JSON object"):
        load_config(config_path=non_object)

    extra = tmp_path / "extra.json"
    extra.write_text(json.dumps({"unknown": True}), encoding="utf-8")
    with pytest.raises(ConfigError, match="Invalid dualpeel config"):
        load_config(config_path=extra)

    out_of_range = tmp_path / "range.json"
    out_of_range.write_text(json.dumps({"simulation": {"erasure_prob": 1.5}}), encoding="utf-8")
    with pytest.raises(ConfigError, match="erasure_prob"):
        load_config(config_path=out_of_range)

    missing = tmp_path / "missing" / "config.json"
    assert load_config(config_path=missing).ensemble.n == 1024

    monkeypatch.setenv("DUALPEEL_TRIALS", "many")
    with pytest.raises(ConfigError, match="Invalid environment override"):
        load_config(config_path=missing)


def test_config_read_os_error_and_empty_merge(
    tmp_path: Path,
    monkeypatch: pytest.MonkeyPatch,
) -> None:
    path = tmp_path / "config.json"
    path.write_text("{}", encoding="utf-8")
    monkeypatch.setattr(
        Path,
        "read_text",
        lambda *_args, **_kwargs: (_ for _ in ()).throw(OSError("no")),
    )
    with pytest.raises(ConfigError, match="Could not read"):
        load_config(config_path=path)

    merger = ConfigMerger()
    assert merger.deep_merge({"a": 1}, {"b": {}}) == {"a": 1}
    assert merger.deep_merge({"a": {"x": 1, "y": 2}}, {"a": {"y": 0}}) == {"a": {"x": 1, "y": 0}}
    assert merger.deep_merge({"a": True}, {"a": False, "b": None}) == {"a": False}


def test_initializer_vets_existing_files_and_can_force_defaults(tmp_path: Path) -> None:
    path = tmp_path / "config.json"
    initializer = ConfigInitializer()

    assert initializer.init(config_path=path).status is InitStatus.created
    path.write_text(json.dumps({"sweep": {"grid": [0.6]}}), encoding="utf-8")
    assert initializer.init(config_path=path).status is InitStatus.valid
    assert json.loads(path.read_text(encoding="utf-8")) == {"sweep": {"grid": [0.6]}}

    path.write_text(json.dumps({"ensembel": {"n": 64}}), encoding="utf-8")
    with pytest.raises(ConfigError, match="is invalid"):
        initializer.init(config_path=path)

    forced = initializer.init(config_path=path, force=True)
    assert forced.status is InitStatus.replaced
    assert load_config(config_path=path) == default_config()
