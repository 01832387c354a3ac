from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from dualpeel.config import CliOverrideProvider
from dualpeel.sim import ExperimentKind, OutputFormat


@dataclass(frozen=True, kw_only=True, slots=True)
class ExperimentRequest:
    """Everything one experiment command received on the command line."""

    kind: ExperimentKind
    overrides: CliOverrideProvider = field(default_factory=CliOverrideProvider)
    code_path: Path | None = None
    dist: str | None = None
    output: Path | None = None
    output_format: OutputFormat | None = None
    paired: bool = False
    exhaustive: bool = False
    word: str | None = None
