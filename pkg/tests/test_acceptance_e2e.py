from __future__ import annotations

import itertools

import numpy as np
import pytest

from dualpeel.core.gf2 import BitVector, SparseBinaryMatrix, is_codeword, left_mul, nullspace
from dualpeel.core.iterative import (
    DecodeSuccess,
    ErasurePattern,
    ErasureWord,
    QuantSuccess,
    erasure_decode,
    erasure_quantize,
    matches_unerased,
)
from dualpeel.core.oracle import (
    MLDecoding,
    build_stacked,
    build_stacked_dual,
    decodable,
    exhaustive_quantize,
    ml_decode,
    optimal_quantize,
    quantizable,
)
from dualpeel.sim import (
    CodeSpec,
    ExperimentKind,
    SimConfig,
    bench_linear_runtime,
    draw_beq_source,
    run_duality_experiment,
    run_failure_bound_experiment,
    run_rate_sweep,
)

pytestmark = pytest.mark.slow


def random_matrix(rng: np.random.Generator, rows: int, columns: int) -> SparseBinaryMatrix:
    return SparseBinaryMatrix.from_dense(rng.integers(0, 2, size=(rows, columns)).tolist())


def test_exhaustive_duality_on_small_random_codes() -> None:
    rng = np.random.default_rng(2024)
    for _ in range(20):
        n = int(rng.integers(2, 11))
        parity_check = random_matrix(rng, int(rng.integers(1, n + 1)), n)
        zero_word = BitVector.zeros(n)
        for bits in itertools.product((0, 1), repeat=n):
            pattern = ErasurePattern.from_bits(bits)
            decoded = erasure_decode(parity_check, ErasureWord.through_pattern(zero_word, pattern))
            source = draw_beq_source(n, 0.0, rng)
            quantized = erasure_quantize(
                parity_check,
                ErasureWord.through_pattern(source.values, pattern.complement()),
            )

            assert decoded.succeeded == quantized.succeeded
            if isinstance(decoded, DecodeSuccess) and isinstance(quantized, QuantSuccess):
                assert decoded.iterations == quantized.iterations


def test_paired_duality_on_a_regular_ldpc_code() -> None:
    config = SimConfig(
        kind=ExperimentKind.duality,
        code=CodeSpec(n=512, dv=3, dc=6, seed=11),
        erasure_prob=0.4,
        trials=10_000,
        seed=5,
    )

    report = run_duality_experiment(config)

    assert report.summary["agreement"] == 10_000
    assert report.summary["anomalies"] == 0


def test_quantizer_successes_are_valid_codewords() -> None:
    rng = np.random.default_rng(99)
    for _ in range(50):
        n = int(rng.integers(4, 16))
        generator = random_matrix(rng, int(rng.integers(1, n)), n)
        dual_check = nullspace(generator)
        for _ in range(40):
            source = draw_beq_source(n, float(rng.random()), rng)
            outcome = erasure_quantize(generator, source)
            if isinstance(outcome, QuantSuccess):
                assert matches_unerased(source, outcome.codeword)
                assert outcome.codeword == left_mul(outcome.message, generator)
                assert is_codeword(dual_check, outcome.codeword)


def test_stacked_systems_agree_on_random_instances() -> None:
    rng = np.random.default_rng(7)
    for _ in range(200):
        n = int(rng.integers(1, 33))
        parity_check = random_matrix(rng, int(rng.integers(1, n + 1)), n)
        pattern = ErasurePattern.from_bits(rng.integers(0, 2, size=n).tolist())

        assert build_stacked(parity_check, pattern) == build_stacked_dual(
            parity_check,
            pattern.complement(),
        )
        assert decodable(parity_check, pattern) == quantizable(parity_check, pattern.complement())


def test_optimal_oracles_agree_with_exhaustive_search_and_peeling() -> None:
    rng = np.random.default_rng(31)
    for _ in range(50):
        n = int(rng.integers(3, 15))
        k = int(rng.integers(1, min(n, 10) + 1))
        generator = random_matrix(rng, k, n)
        parity_check = random_matrix(rng, int(rng.integers(1, n + 1)), n)
        for _ in range(30):
            source = draw_beq_source(n, float(rng.random()), rng)

            witness = optimal_quantize(generator, source)
            exhaustive = exhaustive_quantize(generator, source)

            assert (witness is None) == (exhaustive is None)

            pattern = source.pattern
            received = ErasureWord.through_pattern(BitVector.zeros(n), pattern)
            peeled = erasure_decode(parity_check, received)
            if isinstance(peeled, DecodeSuccess):
                ml = ml_decode(parity_check, received)
                assert isinstance(ml, MLDecoding)
                assert ml.unique
                assert ml.codeword == peeled.word


def test_optimal_quantization_failure_meets_the_degree_bound() -> None:
    config = SimConfig(
        kind=ExperimentKind.bound,
        code=CodeSpec(n=1024, dv=3, dc=6, seed=2),
        erasure_prob=0.5,
        trials=1000,
        seed=9,
    )

    report = run_failure_bound_experiment(config)

    assert report.summary["bound_product"] == pytest.approx(0.982, abs=0.01)
    assert report.summary["meets_bound"] is True


def test_dual_ldpc_quantizer_succeeds_below_the_rate_limit() -> None:
    config = SimConfig(
        kind=ExperimentKind.sweep,
        code=CodeSpec(n=100_000, dv=3, dc=6, seed=4),
        grid=(0.65,),
        trials=200,
        seed=13,
    )

    report = run_rate_sweep(config)

    assert report.summary["success_prob"] >= 0.99
    assert report.summary["threshold"] == 0.65
    assert report.summary["rate_is_exact"] is False
    assert report.summary["converse_holds"] is None


def test_runtime_grows_linearly_with_block_length() -> None:
    config = SimConfig(
        kind=ExperimentKind.bench,
        code=CodeSpec(dv=3, dc=6),
        min_exp=12,
        max_exp=17,
        repeats=3,
        erasure_prob=0.3,
    )

    report = bench_linear_runtime(config)

    assert report.summary["sizes"] == [1 << exponent for exponent in range(12, 18)]
    assert report.summary["max_ratio"] <= 2.5