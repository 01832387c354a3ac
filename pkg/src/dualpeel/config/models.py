from __future__ import annotations

from pathlib import Path
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field

from dualpeel.core.iterative import TieBreak
from dualpeel.sim import CodeSpec, ExperimentKind, OutputFormat, SimConfig

FORBID_EXTRA: Literal["forbid"] = "forbid"


class SimulationConfig(BaseModel):
    model_config = ConfigDict(extra=FORBID_EXTRA)

    trials: int = Field(default=100, ge=1)
    seed: int = Field(default=0, ge=0)
    erasure_prob: float = Field(default=0.3, ge=0.0, le=1.0)
    tie_break: TieBreak = TieBreak.zeros
    output_format: OutputFormat = OutputFormat.csv
    confidence: float = Field(default=0.95, gt=0.0, lt=1.0)
    record_timing: bool = False
    exact_rank_max_n: int = Field(default=4096, ge=0)


class EnsembleConfig(BaseModel):
    model_config = ConfigDict(extra=FORBID_EXTRA)

    n: int = Field(default=1024, ge=0)
    dv: int = Field(default=3, ge=1)
    dc: int = Field(default=6, ge=2)
    seed: int = Field(default=0, ge=0)


class SweepConfig(BaseModel):
    model_config = ConfigDict(extra=FORBID_EXTRA)

    grid: list[float] = Field(default_factory=lambda: [0.5, 0.55, 0.6, 0.65, 0.7, 0.75, 0.8])
    target_success: float = Field(default=0.99, gt=0.0, le=1.0)


class BenchConfig(BaseModel):
    model_config = ConfigDict(extra=FORBID_EXTRA)

    min_exp: int = Field(default=12, ge=0)
    max_exp: int = Field(default=17, ge=0)
    repeats: int = Field(default=3, ge=1)
    erasure_prob: float = Field(default=0.3, ge=0.0, le=1.0)


class DualpeelConfig(BaseModel):
    model_config = ConfigDict(extra=FORBID_EXTRA)

    simulation: SimulationConfig = Field(default_factory=SimulationConfig)
    ensemble: EnsembleConfig = Field(default_factory=EnsembleConfig)
    sweep: SweepConfig = Field(default_factory=SweepConfig)
    bench: BenchConfig = Field(default_factory=BenchConfig)

    def code_spec(self, *, alist_path: Path | None = None, dist: str | None = None) -> CodeSpec:
        """Describe the code named by the flags, falling back to the ensemble section."""
        return CodeSpec(
            alist_path=alist_path,
            n=self.ensemble.n,
            dv=self.ensemble.dv,
            dc=self.ensemble.dc,
            dist=dist,
            seed=self.ensemble.seed,
        )

    def to_sim_config(
        self,
        kind: ExperimentKind,
        *,
        code: CodeSpec,
        paired: bool = False,
        exhaustive: bool = False,
    ) -> SimConfig:
        """Convert effective config into the settings of one experiment.

        Returns:
            Frozen simulation settings consumed by the experiment runner.

        """
        simulation = self.simulation
        erasure_prob = simulation.erasure_prob
        if kind is ExperimentKind.bench:
            erasure_prob = self.bench.erasure_prob
        return SimConfig(
            kind=kind,
            code=code,
            erasure_prob=erasure_prob,
            trials=simulation.trials,
            seed=simulation.seed,
            tie_break=simulation.tie_break,
            confidence=simulation.confidence,
            record_timing=simulation.record_timing,
            grid=tuple(self.sweep.grid),
            target_success=self.sweep.target_success,
            paired=paired,
            exhaustive=exhaustive,
            min_exp=self.bench.min_exp,
            max_exp=self.bench.max_exp,
            repeats=self.bench.repeats,
            exact_rank_max_n=simulation.exact_rank_max_n,
        )


class ConfigError(RuntimeError):
    """Raised when the dualpeel config cannot be read or validated."""
