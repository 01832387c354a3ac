from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass
from types import MappingProxyType

from dualpeel.sim.bench import bench_linear_runtime
from dualpeel.sim.experiments import (
    load_code,
    run_decode_experiment,
    run_duality_experiment,
    run_failure_bound_experiment,
    run_quantize_experiment,
    run_rate_sweep,
)
from dualpeel.sim.models import ExperimentKind, SimConfig, SweepReport

_CODE_EXPERIMENTS = MappingProxyType({
    ExperimentKind.decode: run_decode_experiment,
    ExperimentKind.quantize: run_quantize_experiment,
    ExperimentKind.duality: run_duality_experiment,
    ExperimentKind.bound: run_failure_bound_experiment,
    ExperimentKind.sweep: run_rate_sweep,
})


@dataclass(frozen=True, slots=True)
class ExperimentRunner:
    """Dispatch a ``SimConfig`` to the experiment its ``kind`` names."""

    def run(self, config: SimConfig) -> SweepReport:
        if config.kind is ExperimentKind.bench:
            return bench_linear_runtime(config)
        experiment: Callable[..., SweepReport] = _CODE_EXPERIMENTS[config.kind]
        return experiment(config, load_code(config))
