from __future__ import annotations

from typing import Annotated

import typer
from diwire import Injected

from dualpeel.cli.commands.options import (
    CheckDegreeOption,
    CodeOption,
    DistOption,
    ErasureProbOption,
    FormatOption,
    LengthOption,
    OutputOption,
    SeedOption,
    TieBreakOption,
    TimingOption,
    TrialsOption,
    VariableDegreeOption,
    WordOption,
)
from dualpeel.cli.commands.runtime import injected_command
from dualpeel.cli.commands.services import BoundCommandService, GenCodeCommandService
from dualpeel.cli.experiments import ExperimentCommand, ExperimentRequest
from dualpeel.cli.presenters.base import CliPresenter
from dualpeel.config import CliOverrideProvider, ConfigError, DualpeelConfig, load_config
from dualpeel.sim import CodeSpecError, ExperimentKind

root_app = typer.Typer(
    no_args_is_help=True,
    help="Iterative erasure decoding and quantization on sparse graph codes.",
)


@root_app.command("gen-code")
def gen_code(
    *,
    n: LengthOption = None,
    dv: VariableDegreeOption = None,
    dc: CheckDegreeOption = None,
    dist: DistOption = None,
    seed: Annotated[int | None, typer.Option("--seed", help="Ensemble sampling seed.")] = None,
    output: OutputOption = None,
) -> None:
    """Sample an LDPC ensemble code and print it in alist format."""
    try:
        ensemble = load_config(
            cli_overrides=CliOverrideProvider(n=n, dv=dv, dc=dc, ensemble_seed=seed),
        ).ensemble
    except ConfigError as exc:
        CliPresenter().fail(str(exc))
    GenCodeCommandService().run(
        n=ensemble.n,
        dv=ensemble.dv,
        dc=ensemble.dc,
        dist=dist,
        seed=ensemble.seed,
        output=output,
    )


@injected_command(root_app, "decode")
def decode(
    *,
    code: CodeOption = None,
    n: LengthOption = None,
    dv: VariableDegreeOption = None,
    dc: CheckDegreeOption = None,
    dist: DistOption = None,
    erasure_prob: ErasureProbOption = None,
    trials: TrialsOption = None,
    seed: SeedOption = None,
    output: OutputOption = None,
    output_format: FormatOption = None,
    timing: TimingOption = None,
    word: WordOption = None,
    command: Injected[ExperimentCommand],
) -> None:
    """Peel erasures off channel outputs, or off one --word."""
    _execute(
        command,
        ExperimentRequest(
            kind=ExperimentKind.decode,
            overrides=CliOverrideProvider(
                n=n,
                dv=dv,
                dc=dc,
                erasure_prob=erasure_prob,
                trials=trials,
                seed=seed,
                record_timing=timing,
            ),
            code_path=code,
            dist=dist,
            output=output,
            output_format=output_format,
            word=word,
        ),
    )


@injected_command(root_app, "quantize")
def quantize(
    *,
    code: CodeOption = None,
    n: LengthOption = None,
    dv: VariableDegreeOption = None,
    dc: CheckDegreeOption = None,
    dist: DistOption = None,
    erasure_prob: ErasureProbOption = None,
    trials: TrialsOption = None,
    seed: SeedOption = None,
    tie_break: TieBreakOption = None,
    output: OutputOption = None,
    output_format: FormatOption = None,
    timing: TimingOption = None,
    word: WordOption = None,
    command: Injected[ExperimentCommand],
) -> None:
    """Quantize erasure sources with the dual code, or one --word."""
    _execute(
        command,
        ExperimentRequest(
            kind=ExperimentKind.quantize,
            overrides=CliOverrideProvider(
                n=n,
                dv=dv,
                dc=dc,
                erasure_prob=erasure_prob,
                trials=trials,
                seed=seed,
                tie_break=tie_break,
                record_timing=timing,
            ),
            code_path=code,
            dist=dist,
            output=output,
            output_format=output_format,
            word=word,
        ),
    )


@injected_command(root_app, "duality")
def duality(
    *,
    code: CodeOption = None,
    n: LengthOption = None,
    dv: VariableDegreeOption = None,
    dc: CheckDegreeOption = None,
    dist: DistOption = None,
    erasure_prob: ErasureProbOption = None,
    trials: TrialsOption = None,
    seed: SeedOption = None,
    tie_break: TieBreakOption = None,
    output: OutputOption = None,
    output_format: FormatOption = None,
    timing: TimingOption = None,
    exhaustive: Annotated[
        bool,
        typer.Option("--exhaustive", help="Enumerate every erasure pattern (n <= 20)."),
    ] = False,
    command: Injected[ExperimentCommand],
) -> None:
    """Check that decoding and quantizing complementary patterns stall together."""
    _execute(
        command,
        ExperimentRequest(
            kind=ExperimentKind.duality,
            overrides=CliOverrideProvider(
                n=n,
                dv=dv,
                dc=dc,
                erasure_prob=erasure_prob,
                trials=trials,
                seed=seed,
                tie_break=tie_break,
                record_timing=timing,
            ),
            code_path=code,
            dist=dist,
            output=output,
            output_format=output_format,
            exhaustive=exhaustive,
        ),
    )


@injected_command(root_app, "bound")
def bound(
    *,
    code: CodeOption = None,
    n: LengthOption = None,
    dv: VariableDegreeOption = None,
    dc: CheckDegreeOption = None,
    dist: DistOption = None,
    erasure_prob: ErasureProbOption = None,
    trials: TrialsOption = None,
    seed: SeedOption = None,
    output: OutputOption = None,
    output_format: FormatOption = None,
    timing: TimingOption = None,
    degree: Annotated[
        int | None,
        typer.Option("--degree", help="Evaluate the closed forms for this check degree only."),
    ] = None,
    fraction: Annotated[
        float,
        typer.Option("--fraction", help="Checks of degree <= --degree per code bit."),
    ] = 0.5,
    command: Injected[ExperimentCommand],
) -> None:
    """Compare optimal quantization failures of an LDPC code with the lower bound."""
    if degree is not None:
        config_defaults = _config_or_fail(CliOverrideProvider(n=n, erasure_prob=erasure_prob))
        BoundCommandService().closed_form(
            fraction=fraction,
            n=config_defaults.ensemble.n,
            erasure_prob=config_defaults.simulation.erasure_prob,
            degree=degree,
        )
        return
    _execute(
        command,
        ExperimentRequest(
            kind=ExperimentKind.bound,
            overrides=CliOverrideProvider(
                n=n,
                dv=dv,
                dc=dc,
                erasure_prob=erasure_prob,
                trials=trials,
                seed=seed,
                record_timing=timing,
            ),
            code_path=code,
            dist=dist,
            output=output,
            output_format=output_format,
        ),
    )


@injected_command(root_app, "sweep")
def sweep(
    *,
    code: CodeOption = None,
    n: LengthOption = None,
    dv: VariableDegreeOption = None,
    dc: CheckDegreeOption = None,
    dist: DistOption = None,
    trials: TrialsOption = None,
    seed: SeedOption = None,
    tie_break: TieBreakOption = None,
    output: OutputOption = None,
    output_format: FormatOption = None,
    timing: TimingOption = None,
    grid: Annotated[
        str | None,
        typer.Option("--grid", help="Comma-separated source erasure probabilities."),
    ] = None,
    target: Annotated[
        float | None,
        typer.Option("--target", help="Success probability defining the threshold."),
    ] = None,
    paired: Annotated[
        bool,
        typer.Option("--paired", help="Also decode every complement pattern."),
    ] = False,
    command: Injected[ExperimentCommand],
) -> None:
    """Sweep the source erasure probability and locate the quantizer threshold."""
    _execute(
        command,
        ExperimentRequest(
            kind=ExperimentKind.sweep,
            overrides=CliOverrideProvider(
                n=n,
                dv=dv,
                dc=dc,
                trials=trials,
                seed=seed,
                tie_break=tie_break,
                record_timing=timing,
                grid=_parse_grid(grid),
                target_success=target,
            ),
            code_path=code,
            dist=dist,
            output=output,
            output_format=output_format,
            paired=paired,
        ),
    )


@injected_command(root_app, "bench")
def bench(
    *,
    dv: VariableDegreeOption = None,
    dc: CheckDegreeOption = None,
    seed: SeedOption = None,
    tie_break: TieBreakOption = None,
    output: OutputOption = None,
    output_format: FormatOption = None,
    min_exp: Annotated[
        int | None,
        typer.Option("--min-exp", help="Smallest block length is 2**min_exp."),
    ] = None,
    max_exp: Annotated[
        int | None,
        typer.Option("--max-exp", help="Largest block length is 2**max_exp."),
    ] = None,
    repeats: Annotated[int | None, typer.Option("--repeats", help="Runs per length.")] = None,
    command: Injected[ExperimentCommand],
) -> None:
    """Time both algorithms on regular codes of doubling length."""
    _execute(
        command,
        ExperimentRequest(
            kind=ExperimentKind.bench,
            overrides=CliOverrideProvider(
                dv=dv,
                dc=dc,
                seed=seed,
                tie_break=tie_break,
                min_exp=min_exp,
                max_exp=max_exp,
                repeats=repeats,
            ),
            output=output,
            output_format=output_format,
        ),
    )


def _execute(command: ExperimentCommand, request: ExperimentRequest) -> None:
    try:
        exit_code = command.run(request)
    except (ConfigError, CodeSpecError, ValueError) as exc:
        CliPresenter().fail(str(exc))
    if exit_code:
        raise typer.Exit(exit_code)


def _config_or_fail(overrides: CliOverrideProvider) -> DualpeelConfig:
    try:
        return load_config(cli_overrides=overrides)
    except ConfigError as exc:
        CliPresenter().fail(str(exc))


def _parse_grid(grid: str | None) -> list[float] | None:
    if grid is None:
        return None
    try:
        return [float(grid_value) for grid_value in grid.split(",") if grid_value.strip()]
    except ValueError as exc:
        raise typer.BadParameter(f"Invalid grid {grid!r}: {exc}", param_hint="--grid") from exc
