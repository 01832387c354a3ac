from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field
from enum import StrEnum
from pathlib import Path
from typing import Literal, Self

from pydantic import BaseModel, ConfigDict, Field, model_validator

from dualpeel.core.iterative import TieBreak

FORBID_EXTRA: Literal["forbid"] = "forbid"

CSV_HEADER = ("trial", "seed", "n", "rate", "e", "algorithm", "outcome", "distortion", "runtime_ns")


class CodeSpecError(ValueError):
    """Raised when a code specification cannot produce a parity-check matrix."""


class ExperimentKind(StrEnum):
    decode = "decode"
    quantize = "quantize"
    duality = "duality"
    bound = "bound"
    sweep = "sweep"
    bench = "bench"


class OutputFormat(StrEnum):
    csv = "csv"
    json = "json"


class Outcome(StrEnum):
    success = "success"
    fail = "fail"
    anomaly = "anomaly"


class Algorithm(StrEnum):
    decode = "erasure-decode"
    quantize = "erasure-quantize"
    optimal_quantize = "optimal-quantize"


class CodeSpec(BaseModel):
    """Where the parity-check matrix ``H`` comes from.

    Exactly one of an alist file, a degree-distribution string or a regular
    ``(dv, dc)`` pair describes the code.
    """

    model_config = ConfigDict(extra=FORBID_EXTRA, frozen=True)

    alist_path: Path | None = None
    n: int = Field(default=1024, ge=0)
    dv: int = Field(default=3, ge=1)
    dc: int = Field(default=6, ge=2)
    dist: str | None = None
    seed: int = Field(default=0, ge=0)

    @model_validator(mode="after")
    def _single_source(self) -> Self:
        if self.alist_path is not None and self.dist is not None:
            raise ValueError("Give either an alist path or a degree distribution, not both")
        return self

    @property
    def label(self) -> str:
        if self.alist_path is not None:
            return str(self.alist_path)
        if self.dist is not None:
            return f"dist[{self.dist}] n={self.n}"
        return f"({self.dv},{self.dc})-regular n={self.n}"


class SimConfig(BaseModel):
    model_config = ConfigDict(extra=FORBID_EXTRA, frozen=True)

    kind: ExperimentKind
    code: CodeSpec = Field(default_factory=CodeSpec)
    erasure_prob: float = Field(default=0.3, ge=0.0, le=1.0)
    trials: int = Field(default=100, ge=1)
    seed: int = Field(default=0, ge=0)
    tie_break: TieBreak = TieBreak.zeros
    confidence: float = Field(default=0.95, gt=0.0, lt=1.0)
    record_timing: bool = False
    grid: tuple[float, ...] = (0.5, 0.55, 0.6, 0.65, 0.7, 0.75, 0.8)
    target_success: float = Field(default=0.99, gt=0.0, le=1.0)
    paired: bool = False
    exhaustive: bool = False
    min_exp: int = Field(default=12, ge=0)
    max_exp: int = Field(default=17, ge=0)
    repeats: int = Field(default=3, ge=1)
    exact_rank_max_n: int = Field(default=4096, ge=0)

    @model_validator(mode="after")
    def _check_ranges(self) -> Self:
        if any(not 0 <= grid_value <= 1 for grid_value in self.grid):
            raise ValueError("Sweep grid values must lie in [0, 1]")
        if self.min_exp > self.max_exp:
            raise ValueError(f"min_exp {self.min_exp} exceeds max_exp {self.max_exp}")
        return self


@dataclass(frozen=True, slots=True)
class TrialRecord:
    trial: int
    seed: int
    n: int
    rate: float
    erasure_prob: float
    algorithm: Algorithm
    outcome: Outcome
    distortion: float
    runtime_ns: int = 0

    def csv_row(self) -> tuple[str, ...]:
        return (
            str(self.trial),
            str(self.seed),
            str(self.n),
            f"{self.rate:.6f}",
            f"{self.erasure_prob:.6f}",
            self.algorithm.value,
            self.outcome.value,
            f"{self.distortion:.6f}",
            str(self.runtime_ns),
        )

    def as_payload(self) -> dict[str, object]:
        return dict(zip(CSV_HEADER, self._json_values(), strict=True))

    def _json_values(self) -> tuple[object, ...]:
        return (
            self.trial,
            self.seed,
            self.n,
            self.rate,
            self.erasure_prob,
            self.algorithm.value,
            self.outcome.value,
            self.distortion,
            self.runtime_ns,
        )


@dataclass(frozen=True, slots=True)
class SuccessEstimate:
    """Empirical success probability with a normal-approximation half-width."""

    successes: int
    trials: int
    probability: float
    ci_halfwidth: float


@dataclass(frozen=True, slots=True)
class SweepPoint:
    rate: float
    erasure_prob: float
    algorithm: Algorithm
    estimate: SuccessEstimate
    bound: float | None = None

    def as_payload(self) -> dict[str, object]:
        return {
            "rate": self.rate,
            "e": self.erasure_prob,
            "algorithm": self.algorithm.value,
            "successes": self.estimate.successes,
            "trials": self.estimate.trials,
            "success_prob": self.estimate.probability,
            "ci_halfwidth": self.estimate.ci_halfwidth,
            "bound": self.bound,
        }


@dataclass(frozen=True, slots=True)
class SweepReport:
    """Rows of one experiment plus their aggregate.

    ``summary`` always carries ``success_prob`` and ``ci_halfwidth`` for the
    experiment's headline algorithm; ``anomalies`` counts rows that broke an
    invariant.
    """

    kind: ExperimentKind
    confidence: float
    rows: tuple[TrialRecord, ...]
    points: tuple[SweepPoint, ...] = ()
    summary: Mapping[str, object] = field(default_factory=dict)

    @property
    def anomalies(self) -> int:
        return sum(1 for row in self.rows if row.outcome is Outcome.anomaly)

    @property
    def ok(self) -> bool:
        return self.anomalies == 0
