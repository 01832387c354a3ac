from __future__ import annotations

import logging
from collections import defaultdict

import numpy as np

from dualpeel.core.gf2 import BitVector
from dualpeel.core.iterative import ErasureWord, erasure_decode, erasure_quantize
from dualpeel.sim.codes import CodeLoader
from dualpeel.sim.experiments import Stopwatch, TrialContext, decode_record, quantize_record
from dualpeel.sim.models import (
    Algorithm,
    ExperimentKind,
    SimConfig,
    SweepReport,
    TrialRecord,
)
from dualpeel.sim.randomness import trial_rng, trial_seed
from dualpeel.sim.reports import estimate_rows, sorted_rows
from dualpeel.sim.sources import draw_pattern, draw_source_on_pattern

logger = logging.getLogger(__name__)


def bench_linear_runtime(config: SimConfig) -> SweepReport:
    """Time both algorithms on ``(dv, dc)`` codes of doubling length.

    Each repeat decodes a channel pattern at ``erasure_prob`` and quantizes a
    source on the complement pattern, so both algorithms do a full run.
    """
    loader = CodeLoader(exact_rank_max_n=0)
    stopwatch = Stopwatch(enabled=True)
    rows: list[TrialRecord] = []
    edges: dict[int, int] = {}
    for exponent in range(config.min_exp, config.max_exp + 1):
        n = 1 << exponent
        spec = config.code.model_copy(update={"n": n, "alist_path": None, "dist": None})
        code = loader.load(spec)
        edges[n] = code.parity_check.nnz
        zero_word = BitVector.zeros(n)
        logger.info("Benchmarking n=%d with %d edges", n, edges[n])
        for repeat in range(config.repeats):
            rng = trial_rng(config.seed, exponent, repeat)
            seed = trial_seed(config.seed, exponent, repeat)
            pattern = draw_pattern(n, config.erasure_prob, rng)
            received = ErasureWord.through_pattern(zero_word, pattern)
            source = draw_source_on_pattern(pattern.complement(), rng)
            decoded, decode_ns = stopwatch.run(erasure_decode, code.parity_check, received)
            quantized, quantize_ns = stopwatch.run(
                erasure_quantize,
                code.parity_check,
                source,
                config.tie_break,
                seed=seed,
            )
            rows.append(
                decode_record(
                    TrialContext(repeat, seed, n, code.decode_rate, config.erasure_prob),
                    decoded,
                    zero_word,
                    decode_ns,
                ),
            )
            rows.append(
                quantize_record(
                    TrialContext(repeat, seed, n, code.quantize_rate, 1 - config.erasure_prob),
                    quantized,
                    source,
                    quantize_ns,
                ),
            )

    ordered = sorted_rows(rows)
    overall = estimate_rows(ordered, config.confidence)
    sizes = sorted(edges)
    summary: dict[str, object] = {
        "sizes": sizes,
        "success_prob": overall.probability,
        "ci_halfwidth": overall.ci_halfwidth,
    }
    worst_ratio = 0.0
    for algorithm, prefix in ((Algorithm.decode, "decode"), (Algorithm.quantize, "quantize")):
        medians = median_runtimes(ordered, algorithm)
        series = [medians[n] for n in sizes]
        ratios = doubling_ratios(series)
        per_edge = [medians[n] / edges[n] if edges[n] else 0.0 for n in sizes]
        worst_ratio = max([worst_ratio, *ratios])
        summary |= {
            f"{prefix}_median_ns": series,
            f"{prefix}_ratios": ratios,
            f"{prefix}_ns_per_edge": per_edge,
            f"{prefix}_per_edge_spread": _spread(per_edge),
        }
    summary["max_ratio"] = worst_ratio
    return SweepReport(
        kind=ExperimentKind.bench,
        confidence=config.confidence,
        rows=ordered,
        summary=summary,
    )


def median_runtimes(rows: tuple[TrialRecord, ...], algorithm: Algorithm) -> dict[int, float]:
    samples: defaultdict[int, list[int]] = defaultdict(list)
    for row in rows:
        if row.algorithm is algorithm:
            samples[row.n].append(row.runtime_ns)
    return {n: float(np.median(values)) for n, values in samples.items()}


def doubling_ratios(series: list[float]) -> list[float]:
    """``time(2n) / time(n)`` for consecutive sizes."""
    return [
        later / earlier if earlier else float("inf")
        for earlier, later in zip(series, series[1:], strict=False)
    ]


def _spread(values: list[float]) -> float:
    positive = [value for value in values if value > 0]
    if not positive:
        return 0.0
    return max(positive) / min(positive)

