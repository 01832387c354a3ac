from __future__ import annotations

import numpy as np

from dualpeel.core.gf2 import BitVector, SparseBinaryMatrix
from dualpeel.core.iterative import ErasurePattern, ErasureWord


def gen_beq_source(n: int, erasure_prob: float, seed: int) -> ErasureWord:
    """Source over ``{0, 1, *}``: ``*`` with probability ``e``, else a fair bit."""
    return draw_beq_source(n, erasure_prob, np.random.default_rng(seed))


def gen_bec_received(codeword: BitVector, erasure_prob: float, seed: int) -> ErasureWord:
    """Pass ``codeword`` through a binary erasure channel."""
    return draw_bec_received(codeword, erasure_prob, np.random.default_rng(seed))


def draw_beq_source(n: int, erasure_prob: float, rng: np.random.Generator) -> ErasureWord:
    _require_probability(erasure_prob)
    pattern = draw_pattern(n, erasure_prob, rng)
    return draw_source_on_pattern(pattern, rng)


def draw_bec_received(
    codeword: BitVector,
    erasure_prob: float,
    rng: np.random.Generator,
) -> ErasureWord:
    _require_probability(erasure_prob)
    return ErasureWord.through_pattern(codeword, draw_pattern(codeword.length, erasure_prob, rng))


def draw_pattern(n: int, erasure_prob: float, rng: np.random.Generator) -> ErasurePattern:
    return ErasurePattern(BitVector.from_array(rng.random(n) < erasure_prob))


def draw_source_on_pattern(pattern: ErasurePattern, rng: np.random.Generator) -> ErasureWord:
    """Fair bits on the unerased positions of ``pattern``."""
    bits = BitVector.from_array(rng.integers(0, 2, size=pattern.length, dtype=np.uint8))
    return ErasureWord.through_pattern(bits, pattern)


def random_codeword(
    basis: SparseBinaryMatrix | None,
    n: int,
    rng: np.random.Generator,
) -> BitVector:
    """Uniform codeword from the row space of ``basis``; all-zero without a basis."""
    if basis is None or basis.rows == 0:
        return BitVector.zeros(n)
    coefficients = rng.integers(0, 2, size=basis.rows, dtype=np.uint8)
    codeword = np.zeros(n, dtype=np.uint8)
    for row_index in np.flatnonzero(coefficients).tolist():
        codeword[list(basis.row_support(row_index))] ^= 1
    return BitVector.from_array(codeword)


def _require_probability(erasure_prob: float) -> None:
    if not 0 <= erasure_prob <= 1:
        raise ValueError(f"Erasure probability must lie in [0, 1], got {erasure_prob}")
