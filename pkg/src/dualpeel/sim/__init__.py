from __future__ import annotations

from dualpeel.sim.bench import bench_linear_runtime, doubling_ratios, median_runtimes
from dualpeel.sim.codes import CodeLoader, LoadedCode
from dualpeel.sim.experiments import (
    EXHAUSTIVE_MAX_N,
    Stopwatch,
    TrialContext,
    decode_record,
    load_code,
    quantize_record,
    run_decode_experiment,
    run_duality_experiment,
    run_failure_bound_experiment,
    run_quantize_experiment,
    run_rate_sweep,
)
from dualpeel.sim.export import ReportWriter
from dualpeel.sim.models import (
    CSV_HEADER,
    Algorithm,
    CodeSpec,
    CodeSpecError,
    ExperimentKind,
    Outcome,
    OutputFormat,
    SimConfig,
    SuccessEstimate,
    SweepPoint,
    SweepReport,
    TrialRecord,
)
from dualpeel.sim.randomness import trial_rng, trial_seed, trial_sequence
from dualpeel.sim.reports import estimate, estimate_rows, rows_for, sorted_rows, success_points
from dualpeel.sim.runner import ExperimentRunner
from dualpeel.sim.sources import (
    draw_bec_received,
    draw_beq_source,
    draw_pattern,
    draw_source_on_pattern,
    gen_bec_received,
    gen_beq_source,
    random_codeword,
)

__all__ = (
    "CSV_HEADER",
    "EXHAUSTIVE_MAX_N",
    "Algorithm",
    "CodeLoader",
    "CodeSpec",
    "CodeSpecError",
    "ExperimentKind",
    "ExperimentRunner",
    "LoadedCode",
    "Outcome",
    "OutputFormat",
    "ReportWriter",
    "SimConfig",
    "Stopwatch",
    "SuccessEstimate",
    "SweepPoint",
    "SweepReport",
    "TrialContext",
    "TrialRecord",
    "bench_linear_runtime",
    "decode_record",
    "doubling_ratios",
    "draw_bec_received",
    "draw_beq_source",
    "draw_pattern",
    "draw_source_on_pattern",
    "estimate",
    "estimate_rows",
    "gen_bec_received",
    "gen_beq_source",
    "load_code",
    "median_runtimes",
    "quantize_record",
    "random_codeword",
    "rows_for",
    "run_decode_experiment",
    "run_duality_experiment",
    "run_failure_bound_experiment",
    "run_quantize_experiment",
    "run_rate_sweep",
    "sorted_rows",
    "success_points",
    "trial_rng",
    "trial_seed",
    "trial_sequence",
)
