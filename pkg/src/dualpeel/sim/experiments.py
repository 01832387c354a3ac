"""Monte Carlo experiments over one code.

Trial ``i`` of an experiment draws all of its randomness from
``trial_rng(seed, i)`` (``trial_rng(seed, g, i)`` for grid point ``g``), so
results do not depend on trial execution order.
"""

from __future__ import annotations

import logging
import math
import time
from collections.abc import Callable, Iterator, Sequence
from dataclasses import dataclass, replace
from typing import ParamSpec, TypeVar

from dualpeel.core.gf2 import BitVector
from dualpeel.core.iterative import (
    DecodeFailure,
    DecodeOutcome,
    ErasurePattern,
    ErasureWord,
    QuantFailure,
    QuantOutcome,
    erasure_decode,
    erasure_quantize,
    matches_unerased,
)
from dualpeel.core.oracle import (
    bound_from_profile,
    pattern_quantizable_with_parity_check,
    quantize_with_parity_check,
)
from dualpeel.sim.codes import CodeLoader, LoadedCode
from dualpeel.sim.models import (
    Algorithm,
    CodeSpecError,
    ExperimentKind,
    Outcome,
    SimConfig,
    SweepReport,
    TrialRecord,
)
from dualpeel.sim.randomness import trial_rng, trial_seed
from dualpeel.sim.reports import estimate_rows, rows_for, sorted_rows, success_points
from dualpeel.sim.sources import (
    draw_bec_received,
    draw_beq_source,
    draw_pattern,
    draw_source_on_pattern,
    random_codeword,
)

logger = logging.getLogger(__name__)

EXHAUSTIVE_MAX_N = 20

ParamsT = ParamSpec("ParamsT")
ResultT = TypeVar("ResultT")


@dataclass(frozen=True, slots=True)
class Stopwatch:
    """Time a call when enabled; report zero otherwise so output stays reproducible."""

    enabled: bool

    def run(
        self,
        action: Callable[ParamsT, ResultT],
        *args: ParamsT.args,
        **kwargs: ParamsT.kwargs,
    ) -> tuple[ResultT, int]:
        if not self.enabled:
            return action(*args, **kwargs), 0
        started = time.perf_counter_ns()
        result = action(*args, **kwargs)
        return result, time.perf_counter_ns() - started


@dataclass(frozen=True, slots=True)
class TrialContext:
    trial: int
    seed: int
    n: int
    rate: float
    erasure_prob: float


def decode_record(
    context: TrialContext,
    outcome: DecodeOutcome,
    transmitted: BitVector,
    runtime_ns: int,
) -> TrialRecord:
    """Classify a decoder run; a success must return the transmitted codeword."""
    n = max(context.n, 1)
    if isinstance(outcome, DecodeFailure):
        residual = outcome.residual_erasures / n
        return _record(context, Algorithm.decode, Outcome.fail, residual, runtime_ns)
    if outcome.word != transmitted:
        logger.warning("Trial %d decoded to a different codeword", context.trial)
        wrong = (outcome.word.bits ^ transmitted.bits).bit_count()
        return _record(context, Algorithm.decode, Outcome.anomaly, wrong / n, runtime_ns)
    return _record(context, Algorithm.decode, Outcome.success, 0.0, runtime_ns)


def quantize_record(
    context: TrialContext,
    outcome: QuantOutcome,
    source: ErasureWord,
    runtime_ns: int,
) -> TrialRecord:
    """Classify a quantizer run; a success must match every unerased symbol."""
    n = max(context.n, 1)
    if isinstance(outcome, QuantFailure):
        residual = outcome.residual_unerased / n
        return _record(context, Algorithm.quantize, Outcome.fail, residual, runtime_ns)
    if not matches_unerased(source, outcome.codeword):
        logger.warning("Trial %d quantized to a word that misses the source", context.trial)
        wrong = (outcome.codeword.bits ^ source.values.bits) & ~source.pattern.indicator.bits
        mismatch = wrong.bit_count() / n
        return _record(context, Algorithm.quantize, Outcome.anomaly, mismatch, runtime_ns)
    return _record(context, Algorithm.quantize, Outcome.success, 0.0, runtime_ns)


def run_decode_experiment(config: SimConfig, code: LoadedCode | None = None) -> SweepReport:
    """Send random codewords through the erasure channel and peel them."""
    code = code or load_code(config)
    stopwatch = Stopwatch(config.record_timing)
    logger.info("Decode experiment: %d trials at e=%.3f", config.trials, config.erasure_prob)
    rows: list[TrialRecord] = []
    for trial in range(config.trials):
        rng = trial_rng(config.seed, trial)
        seed = trial_seed(config.seed, trial)
        context = TrialContext(trial, seed, code.n, code.decode_rate, config.erasure_prob)
        codeword = random_codeword(code.basis, code.n, rng)
        received = draw_bec_received(codeword, config.erasure_prob, rng)
        outcome, elapsed = stopwatch.run(erasure_decode, code.parity_check, received)
        rows.append(decode_record(context, outcome, codeword, elapsed))
    return _single_algorithm_report(config, rows)


def run_quantize_experiment(config: SimConfig, code: LoadedCode | None = None) -> SweepReport:
    """Quantize random erasure sources with the dual code generated by ``H``."""
    code = code or load_code(config)
    stopwatch = Stopwatch(config.record_timing)
    logger.info("Quantize experiment: %d trials at e=%.3f", config.trials, config.erasure_prob)
    rows: list[TrialRecord] = []
    for trial in range(config.trials):
        rng = trial_rng(config.seed, trial)
        seed = trial_seed(config.seed, trial)
        context = TrialContext(trial, seed, code.n, code.quantize_rate, config.erasure_prob)
        source = draw_beq_source(code.n, config.erasure_prob, rng)
        outcome, elapsed = stopwatch.run(
            erasure_quantize,
            code.parity_check,
            source,
            config.tie_break,
            seed=seed,
        )
        rows.append(quantize_record(context, outcome, source, elapsed))
    return _single_algorithm_report(config, rows)


def run_duality_experiment(config: SimConfig, code: LoadedCode | None = None) -> SweepReport:
    """Run the decoder on ``e`` and the quantizer on its complement, trial by trial.

    The two must stall together. A disagreement, a wrong decoding or an
    invalid quantization marks both rows of the trial as anomalies.
    """
    code = code or load_code(config)
    stopwatch = Stopwatch(config.record_timing)
    rows: list[TrialRecord] = []
    agreement = 0
    trial_count = 0
    for trial, pattern in _duality_patterns(config, code.n):
        rng = trial_rng(config.seed, trial)
        seed = trial_seed(config.seed, trial)
        if pattern is None:
            pattern = draw_pattern(code.n, config.erasure_prob, rng)
            channel_prob = config.erasure_prob
        else:
            channel_prob = pattern.weight / code.n if code.n else 0.0
        codeword = random_codeword(code.basis, code.n, rng)
        received = ErasureWord.through_pattern(codeword, pattern)
        source = draw_source_on_pattern(pattern.complement(), rng)

        decoded, decode_ns = stopwatch.run(erasure_decode, code.parity_check, received)
        quantized, quantize_ns = stopwatch.run(
            erasure_quantize,
            code.parity_check,
            source,
            config.tie_break,
            seed=seed,
        )
        decode_row = decode_record(
            TrialContext(trial, seed, code.n, code.decode_rate, channel_prob),
            decoded,
            codeword,
            decode_ns,
        )
        quantize_row = quantize_record(
            TrialContext(trial, seed, code.n, code.quantize_rate, 1 - channel_prob),
            quantized,
            source,
            quantize_ns,
        )
        trial_count += 1
        agreed = decoded.succeeded == quantized.succeeded
        if agreed:
            agreement += 1
        else:
            logger.warning(
                "Trial %d: decoder %s but quantizer %s on complementary patterns",
                trial,
                _verdict(decoded.succeeded),
                _verdict(quantized.succeeded),
            )
        if not agreed or Outcome.anomaly in {decode_row.outcome, quantize_row.outcome}:
            decode_row = replace(decode_row, outcome=Outcome.anomaly)
            quantize_row = replace(quantize_row, outcome=Outcome.anomaly)
        rows.extend((decode_row, quantize_row))

    ordered = sorted_rows(rows)
    decode_estimate = estimate_rows(rows_for(ordered, Algorithm.decode), config.confidence)
    quantize_estimate = estimate_rows(rows_for(ordered, Algorithm.quantize), config.confidence)
    report = SweepReport(
        kind=ExperimentKind.duality,
        confidence=config.confidence,
        rows=ordered,
        points=success_points(ordered, config.confidence) if not config.exhaustive else (),
        summary={
            "trials": trial_count,
            "agreement": agreement,
            "agreement_fraction": agreement / trial_count if trial_count else 1.0,
            "success_prob": decode_estimate.probability,
            "ci_halfwidth": decode_estimate.ci_halfwidth,
            "decode_success_prob": decode_estimate.probability,
            "quantize_success_prob": quantize_estimate.probability,
            "anomalies": sum(1 for row in ordered if row.outcome is Outcome.anomaly) // 2,
        },
    )
    logger.info("Duality experiment: %d/%d trials agree", agreement, trial_count)
    return report


def run_failure_bound_experiment(config: SimConfig, code: LoadedCode | None = None) -> SweepReport:
    """Optimal quantization with the code ``{x : H xᵀ = 0}`` itself.

    Each trial asks whether some codeword matches a random source; the
    failure frequency is compared with the degree-profile lower bound.
    """
    code = code or load_code(config)
    stopwatch = Stopwatch(config.record_timing)
    full_rank = code.rank if code.rank_is_exact else None
    rows: list[TrialRecord] = []
    pattern_failures = 0
    for trial in range(config.trials):
        rng = trial_rng(config.seed, trial)
        seed = trial_seed(config.seed, trial)
        context = TrialContext(trial, seed, code.n, code.decode_rate, config.erasure_prob)
        source = draw_beq_source(code.n, config.erasure_prob, rng)
        found, elapsed = stopwatch.run(quantize_with_parity_check, code.parity_check, source)
        if not pattern_quantizable_with_parity_check(
            code.parity_check,
            source.pattern,
            full_rank=full_rank,
        ):
            pattern_failures += 1
        outcome = Outcome.success if found else Outcome.fail
        distortion = 0.0 if found else 1 / max(code.n, 1)
        rows.append(_record(context, Algorithm.optimal_quantize, outcome, distortion, elapsed))

    ordered = sorted_rows(rows)
    success = estimate_rows(ordered, config.confidence)
    failure_prob = 1 - success.probability
    bound = bound_from_profile(code.check_profile(), max(code.n, 1), config.erasure_prob)
    summary: dict[str, object] = {
        "trials": config.trials,
        "success_prob": success.probability,
        "failure_prob": failure_prob,
        "ci_halfwidth": success.ci_halfwidth,
        "pattern_failure_prob": pattern_failures / config.trials,
        "bound_product": 0.0,
        "bound_weak_product": 0.0,
        "bound_exponential": 0.0,
        "bound_degree": None,
        "bound_fraction": None,
    }
    bound_values: dict[tuple[Algorithm, float], float] = {}
    if bound is not None:
        bound_values[Algorithm.optimal_quantize, config.erasure_prob] = bound.product
        sigma = math.sqrt(bound.product * (1 - bound.product) / config.trials)
        summary |= {
            "bound_product": bound.product,
            "bound_weak_product": bound.weak_product,
            "bound_exponential": bound.exponential,
            "bound_degree": bound.degree,
            "bound_fraction": bound.fraction,
            "meets_bound": failure_prob >= bound.product - 3 * sigma,
        }
    return SweepReport(
        kind=ExperimentKind.bound,
        confidence=config.confidence,
        rows=ordered,
        points=success_points(ordered, config.confidence, bound_values),
        summary=summary,
    )


def run_rate_sweep(config: SimConfig, code: LoadedCode | None = None) -> SweepReport:
    """Quantizer success across the source-erasure grid.

    The threshold is the smallest grid value whose success reaches
    ``target_success``; its gap to the rate-distortion limit ``1 - e`` is
    reported. With ``paired`` the decoder also runs on every complement
    pattern.
    """
    code = code or load_code(config)
    stopwatch = Stopwatch(config.record_timing)
    zero_word = BitVector.zeros(code.n)
    rows: list[TrialRecord] = []
    for grid_index, erasure_prob in enumerate(config.grid):
        logger.info("Sweep point e=%.3f: %d trials", erasure_prob, config.trials)
        for trial in range(config.trials):
            rng = trial_rng(config.seed, grid_index, trial)
            seed = trial_seed(config.seed, grid_index, trial)
            source = draw_beq_source(code.n, erasure_prob, rng)
            quantized, elapsed = stopwatch.run(
                erasure_quantize,
                code.parity_check,
                source,
                config.tie_break,
                seed=seed,
            )
            context = TrialContext(trial, seed, code.n, code.quantize_rate, erasure_prob)
            rows.append(quantize_record(context, quantized, source, elapsed))
            if config.paired:
                received = ErasureWord.through_pattern(zero_word, source.pattern.complement())
                decoded, elapsed = stopwatch.run(erasure_decode, code.parity_check, received)
                context = TrialContext(trial, seed, code.n, code.decode_rate, 1 - erasure_prob)
                rows.append(decode_record(context, decoded, zero_word, elapsed))

    ordered = sorted_rows(rows)
    points = success_points(ordered, config.confidence)
    quantizer_points = [point for point in points if point.algorithm is Algorithm.quantize]
    reached = sorted(
        point.erasure_prob
        for point in quantizer_points
        if point.estimate.probability >= config.target_success
    )
    threshold = reached[0] if reached else None
    overall = estimate_rows(rows_for(ordered, Algorithm.quantize), config.confidence)
    return SweepReport(
        kind=ExperimentKind.sweep,
        confidence=config.confidence,
        rows=ordered,
        points=points,
        summary={
            "rate": code.quantize_rate,
            "rate_is_exact": code.rank_is_exact,
            "target_success": config.target_success,
            "success_prob": overall.probability,
            "ci_halfwidth": overall.ci_halfwidth,
            "threshold": threshold,
            "gap": None if threshold is None else code.quantize_rate - (1 - threshold),
            "converse_holds": _converse_holds(code, reached),
        },
    )


def _converse_holds(code: LoadedCode, reached: Sequence[float]) -> bool | None:
    """Check ``R >= 1 - e`` at every successful point; ``None`` when ``R`` is only nominal."""
    if not code.rank_is_exact:
        return None
    return all(code.quantize_rate >= 1 - erasure_prob - 1e-12 for erasure_prob in reached)


def load_code(config: SimConfig) -> LoadedCode:
    return CodeLoader(exact_rank_max_n=config.exact_rank_max_n).load(config.code)


def _duality_patterns(config: SimConfig, n: int) -> Iterator[tuple[int, ErasurePattern | None]]:
    if not config.exhaustive:
        for trial in range(config.trials):
            yield trial, None
        return
    if n > EXHAUSTIVE_MAX_N:
        raise CodeSpecError(f"Exhaustive duality supports n <= {EXHAUSTIVE_MAX_N}, got n={n}")
    for index in range(1 << n):
        yield index, ErasurePattern(BitVector(n, index))


def _single_algorithm_report(config: SimConfig, rows: list[TrialRecord]) -> SweepReport:
    ordered = sorted_rows(rows)
    overall = estimate_rows(ordered, config.confidence)
    return SweepReport(
        kind=config.kind,
        confidence=config.confidence,
        rows=ordered,
        points=success_points(ordered, config.confidence),
        summary={
            "trials": len(ordered),
            "success_prob": overall.probability,
            "ci_halfwidth": overall.ci_halfwidth,
            "anomalies": sum(1 for row in ordered if row.outcome is Outcome.anomaly),
        },
    )


def _record(
    context: TrialContext,
    algorithm: Algorithm,
    outcome: Outcome,
    distortion: float,
    runtime_ns: int,
) -> TrialRecord:
    return TrialRecord(
        trial=context.trial,
        seed=context.seed,
        n=context.n,
        rate=context.rate,
        erasure_prob=context.erasure_prob,
        algorithm=algorithm,
        outcome=outcome,
        distortion=distortion,
        runtime_ns=runtime_ns,
    )


def _verdict(succeeded: bool) -> str:
    return "succeeded" if succeeded else "stalled"

