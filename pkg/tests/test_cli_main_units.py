from __future__ import annotations

import json
from dataclasses import replace
from io import StringIO
from pathlib import Path

import pytest
from rich.console import Console
from typer.testing import CliRunner

from dualpeel.cli import __main__ as cli
from dualpeel.cli.presenters.base import CliPresenter
from dualpeel.cli.presenters.reports import ReportPresenter
from dualpeel.config import environment_variable_names
from dualpeel.core.gf2 import SparseBinaryMatrix
from dualpeel.core.graph import AlistCodec
from dualpeel.core.iterative import ErasureWord, erasure_decode
from dualpeel.core.oracle import ml_decode
from dualpeel.sim import ExperimentRunner, Outcome, SimConfig, SweepReport

runner = CliRunner()

SPC3_CHECK = SparseBinaryMatrix.from_dense([[1, 1, 1]])


@pytest.fixture(autouse=True)
def isolated_config(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> Path:
    for env_name in environment_variable_names():
        monkeypatch.delenv(env_name, raising=False)
    path = tmp_path / "config" / "config.json"
    monkeypatch.setenv("DUALPEEL_CONFIG", str(path))
    return path


@pytest.fixture
def spc_alist(tmp_path: Path) -> Path:
    path = tmp_path / "spc3.alist"
    AlistCodec().write(path, SPC3_CHECK)
    return path


def capture_reports() -> tuple[StringIO, ReportPresenter]:
    output = StringIO()
    presenter = ReportPresenter(
        base=CliPresenter(
            console=Console(file=output, force_terminal=False, color_system=None, width=100),
            error_console=Console(file=output, force_terminal=False, color_system=None, width=100),
        ),
    )
    return output, presenter


def test_help_and_config_commands(isolated_config: Path) -> None:
    assert runner.invoke(cli.app, ["--help"]).exit_code == 0
    assert runner.invoke(cli.app, ["config", "path"]).stdout.strip() == str(isolated_config)

    init = runner.invoke(cli.app, ["config", "init"])
    assert init.exit_code == 0
    assert isolated_config.exists()

    show = runner.invoke(cli.app, ["config", "show"])
    assert show.exit_code == 0
    assert json.loads(show.stdout)["ensemble"]["n"] == 1024

    section = runner.invoke(cli.app, ["config", "show", "bench"])
    assert section.exit_code == 0
    assert json.loads(section.stdout)["max_exp"] == 17

    forced = runner.invoke(cli.app, ["config", "init", "--force"])
    assert forced.exit_code == 0
    assert "Replaced" in forced.stdout

    unknown = runner.invoke(cli.app, ["config", "show", "nope"])
    assert unknown.exit_code == 1
    assert "Unknown config section: nope" in unknown.stderr


def test_config_errors_exit_with_a_message(isolated_config: Path) -> None:
    isolated_config.parent.mkdir(parents=True)
    isolated_config.write_text("{bad", encoding="utf-8")

    show = runner.invoke(cli.app, ["config", "show"])
    decode = runner.invoke(cli.app, ["decode", "--n", "12", "--trials", "1"])

    assert show.exit_code == 1
    assert "Invalid JSON" in show.stderr
    assert runner.invoke(cli.app, ["config", "init"]).exit_code == 1
    assert decode.exit_code == 1
    assert "Error:" in decode.stderr


def test_gen_code_prints_alist_text(tmp_path: Path) -> None:
    result = runner.invoke(cli.app, ["gen-code", "--n", "12", "--seed", "1"])
    irregular = tmp_path / "codes" / "irregular.alist"
    saved = runner.invoke(
        cli.app,
        ["gen-code", "--n", "8", "--dist", "2:0.5,3:0.5/5:1", "--output", str(irregular)],
    )

    assert result.exit_code == 0
    assert AlistCodec().loads(result.stdout).shape == (6, 12)
    assert "Sampled code" in result.stderr
    assert saved.exit_code == 0
    assert saved.stdout == ""
    assert AlistCodec().read(irregular).shape == (4, 8)


def test_gen_code_rejects_bad_ensembles() -> None:
    result = runner.invoke(cli.app, ["gen-code", "--n", "7"])

    assert result.exit_code == 1
    assert "not divisible" in result.stderr


def test_decode_single_word(spc_alist: Path) -> None:
    result = runner.invoke(cli.app, ["decode", "--code", str(spc_alist), "--word", "01*"])
    stalled = runner.invoke(cli.app, ["decode", "--code", str(spc_alist), "--word", "**1"])

    assert result.exit_code == 0
    assert "Yes" in result.stdout
    assert "011 (unique)" in result.stdout
    assert stalled.exit_code == 0
    assert "0, 1" in stalled.stdout
    assert "one of 2^1" in stalled.stdout


def test_quantize_single_word(spc_alist: Path) -> None:
    result = runner.invoke(cli.app, ["quantize", "--code", str(spc_alist), "--word", "**1"])
    stalled = runner.invoke(cli.app, ["quantize", "--code", str(spc_alist), "--word", "0*1"])

    assert result.exit_code == 0
    assert "111" in result.stdout
    assert stalled.exit_code == 0
    assert "No exact codeword" in stalled.stdout


def test_single_word_errors() -> None:
    mismatch = runner.invoke(cli.app, ["decode", "--n", "12", "--word", "01*"])
    bad_symbol = runner.invoke(cli.app, ["quantize", "--n", "12", "--word", "01x"])

    assert mismatch.exit_code == 1
    assert "Received word has length 3" in mismatch.stderr
    assert bad_symbol.exit_code == 1
    assert "Error:" in bad_symbol.stderr


def test_decode_and_quantize_reports() -> None:
    decode = runner.invoke(
        cli.app,
        ["decode", "--n", "48", "--trials", "5", "-e", "0.2", "--seed", "3"],
    )
    quantize = runner.invoke(
        cli.app,
        ["quantize", "--n", "48", "--trials", "4", "--tie-break", "random", "--format", "json"],
    )

    assert decode.exit_code == 0
    assert decode.stdout.splitlines()[0].startswith("trial,seed,n,rate,e,algorithm")
    assert len(decode.stdout.splitlines()) == 6
    assert "Summary" in decode.stderr
    assert quantize.exit_code == 0
    payload = json.loads(quantize.stdout)
    assert payload["config"]["tie_break"] == "random"
    assert len(payload["rows"]) == 4


def test_report_can_be_written_to_a_file(tmp_path: Path) -> None:
    output = tmp_path / "reports" / "quantize.csv"

    result = runner.invoke(
        cli.app,
        ["quantize", "--n", "48", "--trials", "3", "--output", str(output), "--timing"],
    )

    assert result.exit_code == 0
    assert result.stdout == ""
    assert "Report written" in result.stderr
    assert len(output.read_text(encoding="utf-8").splitlines()) == 4


def test_exhaustive_duality_reports_full_agreement(spc_alist: Path) -> None:
    result = runner.invoke(
        cli.app,
        ["duality", "--code", str(spc_alist), "--exhaustive", "--format", "json"],
    )

    assert result.exit_code == 0
    summary = json.loads(result.stdout)["summary"]
    assert summary["agreement"] == 8
    assert summary["anomalies"] == 0


def test_bound_commands(spc_alist: Path) -> None:
    closed_form = runner.invoke(cli.app, ["bound", "--degree", "6", "--n", "1024", "-e", "0.5"])
    simulated = runner.invoke(
        cli.app,
        ["bound", "--code", str(spc_alist), "-e", "1.0", "--trials", "5", "--format", "json"],
    )
    invalid = runner.invoke(cli.app, ["bound", "--degree", "0"])

    assert closed_form.exit_code == 0
    assert "Weak product" in closed_form.stdout
    assert "0.9819" in closed_form.stdout
    assert simulated.exit_code == 0
    assert json.loads(simulated.stdout)["summary"]["failure_prob"] == 0.0
    assert invalid.exit_code == 1
    assert "Check degree" in invalid.stderr


def test_sweep_and_bench_commands(spc_alist: Path) -> None:
    sweep = runner.invoke(
        cli.app,
        [
            "sweep",
            "--code",
            str(spc_alist),
            "--grid",
            "0,1",
            "--trials",
            "4",
            "--paired",
            "--format",
            "json",
        ],
    )
    bench = runner.invoke(
        cli.app,
        ["-v", "bench", "--min-exp", "3", "--max-exp", "4", "--repeats", "1"],
    )
    bad_grid = runner.invoke(cli.app, ["sweep", "--grid", "0.5,abc"])

    assert sweep.exit_code == 0
    assert json.loads(sweep.stdout)["summary"]["threshold"] == 1.0
    assert bench.exit_code == 0
    assert len(bench.stdout.splitlines()) == 5
    assert bad_grid.exit_code == 2
    assert "Invalid grid" in bad_grid.stderr


def test_anomalous_reports_exit_with_failure(
    spc_alist: Path,
    monkeypatch: pytest.MonkeyPatch,
) -> None:
    original_run = ExperimentRunner.run

    def run_with_anomaly(self: ExperimentRunner, config: SimConfig) -> SweepReport:
        report = original_run(self, config)
        broken = replace(report.rows[0], outcome=Outcome.anomaly)
        return replace(report, rows=(broken, *report.rows[1:]))

    monkeypatch.setattr(ExperimentRunner, "run", run_with_anomaly)

    result = runner.invoke(cli.app, ["decode", "--code", str(spc_alist), "--trials", "2"])

    assert result.exit_code == 1
    assert "anomalous rows" in result.stderr


def test_report_presenter_renders_outcomes() -> None:
    output, presenter = capture_reports()
    received = ErasureWord.from_string("1*0")

    presenter.decoded(erasure_decode(SPC3_CHECK, received), ml_decode(SPC3_CHECK, received))
    presenter.decoded(
        erasure_decode(SPC3_CHECK, ErasureWord.from_string("100")),
        ml_decode(SPC3_CHECK, ErasureWord.from_string("100")),
    )
    presenter.anomalies(2)
    presenter.saved("report.csv")

    rendered = output.getvalue()
    assert "110 (unique)" in rendered
    assert "Anomaly: unerased symbols violate a parity check" in rendered
    assert "2 anomalous rows recorded" in rendered
    assert "report.csv" in rendered


def test_main_invokes_app(monkeypatch: pytest.MonkeyPatch) -> None:
    called = False

    def fake_app() -> None:
        nonlocal called
        called = True

    monkeypatch.setattr(cli, "app", fake_app)
    cli.main()
    assert called
