from __future__ import annotations

from pathlib import Path
from typing import Annotated, TypeAlias

import typer

from dualpeel.core.iterative import TieBreak
from dualpeel.sim import OutputFormat

CodeOption: TypeAlias = Annotated[
    Path | None,
    typer.Option("--code", help="Parity-check matrix in alist format.", dir_okay=False),
]
LengthOption: TypeAlias = Annotated[
    int | None,
    typer.Option("--n", help="Block length of a sampled ensemble code."),
]
VariableDegreeOption: TypeAlias = Annotated[
    int | None,
    typer.Option("--dv", help="Variable degree of a regular ensemble."),
]
CheckDegreeOption: TypeAlias = Annotated[
    int | None,
    typer.Option("--dc", help="Check degree of a regular ensemble."),
]
DistOption: TypeAlias = Annotated[
    str | None,
    typer.Option("--dist", help="Degree distribution such as '2:0.5,3:0.5/6:1'."),
]
ErasureProbOption: TypeAlias = Annotated[
    float | None,
    typer.Option("--erasure-prob", "-e", help="Channel or source erasure probability."),
]
TrialsOption: TypeAlias = Annotated[
    int | None,
    typer.Option("--trials", help="Number of Monte Carlo trials."),
]
SeedOption: TypeAlias = Annotated[
    int | None,
    typer.Option("--seed", help="Master seed (falls back to DUALPEEL_SEED)."),
]
TieBreakOption: TypeAlias = Annotated[
    TieBreak | None,
    typer.Option("--tie-break", help="How unreserved message bits are set.", case_sensitive=False),
]
OutputOption: TypeAlias = Annotated[
    Path | None,
    typer.Option("--output", "-o", help="Write the report here instead of stdout.", dir_okay=False),
]
FormatOption: TypeAlias = Annotated[
    OutputFormat | None,
    typer.Option("--format", help="Report format.", case_sensitive=False),
]
TimingOption: TypeAlias = Annotated[
    bool | None,
    typer.Option("--timing/--no-timing", help="Record per-trial runtimes."),
]
WordOption: TypeAlias = Annotated[
    str | None,
    typer.Option("--word", help="Run once on a word over 0, 1 and '*'."),
]
