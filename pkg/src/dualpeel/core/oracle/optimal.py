from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import TypeAlias

import numpy as np

from dualpeel.core.gf2 import (
    BitVector,
    DimensionMismatchError,
    SparseBinaryMatrix,
    is_consistent,
    left_mul,
    mat_vec_mul,
    rank,
    solve_left,
    solve_right,
)
from dualpeel.core.iterative import ErasurePattern, ErasureWord

logger = logging.getLogger(__name__)

EXHAUSTIVE_MAX_ROWS = 20


class OracleLimitError(ValueError):
    """Raised when a brute-force search would be too large."""


@dataclass(frozen=True, slots=True)
class MLDecoding:
    """A codeword consistent with the received word.

    ``ambiguity`` is the dimension of the solution set, so ``2**ambiguity``
    codewords fit and ``unique`` means exactly one does.
    """

    codeword: BitVector
    ambiguity: int

    @property
    def unique(self) -> bool:
        return self.ambiguity == 0


@dataclass(frozen=True, slots=True)
class MLAnomaly:
    """No codeword agrees with the unerased symbols."""

    reason: str


MLOutcome: TypeAlias = MLDecoding | MLAnomaly


@dataclass(frozen=True, slots=True)
class OracleWitness:
    """Solution ``(u v)`` of the dual stacked system.

    ``u`` holds the values of ``v G⊥`` on the erased source positions, in
    position order, and ``word`` is the quantized codeword ``v G⊥``.
    """

    u: BitVector
    v: BitVector
    word: BitVector

    def combined(self) -> BitVector:
        """``(u v)`` as one vector, ``u`` first."""
        combined_bits = self.u.bits | (self.v.bits << self.u.length)
        return BitVector(self.u.length + self.v.length, combined_bits)


def decodable(parity_check: SparseBinaryMatrix, pattern: ErasurePattern) -> bool:
    """Whether the erased bits are determined by the unerased ones.

    Equivalent to the stacked system of ``(H, e)`` having rank ``n``; computed
    on the erased columns of ``H`` alone.
    """
    _require_length(parity_check, pattern.length)
    erased = pattern.erased_positions()
    return rank(parity_check.select_columns(erased)) == len(erased)


def quantizable(dual_generator: SparseBinaryMatrix, dual_pattern: ErasurePattern) -> bool:
    """Whether every source with erasures ``e⊥`` has an exact dual codeword."""
    _require_length(dual_generator, dual_pattern.length)
    unerased = dual_pattern.unerased_positions()
    return rank(dual_generator.select_columns(unerased)) == len(unerased)


def ml_decode(parity_check: SparseBinaryMatrix, received: ErasureWord) -> MLOutcome:
    """Solve ``H_E x_E = H_U y_U`` for the erased bits."""
    _require_length(parity_check, received.length)
    erased = received.pattern.erased_positions()
    syndrome = mat_vec_mul(parity_check, received.values)
    found = solve_right(parity_check.select_columns(erased), syndrome)
    if found is None:
        logger.warning("Received word is inconsistent with every codeword")
        return MLAnomaly(reason="unerased symbols violate a parity check")

    word = received.values.to_array().copy()
    if erased:
        word[list(erased)] = found.solution.to_array()
    return MLDecoding(codeword=BitVector.from_array(word), ambiguity=len(erased) - found.rank)


def optimal_quantize(
    dual_generator: SparseBinaryMatrix,
    source: ErasureWord,
) -> OracleWitness | None:
    """Find a codeword of the row space of ``G⊥`` matching ``source`` off its erasures."""
    _require_length(dual_generator, source.length)
    pattern = source.pattern
    unerased = pattern.unerased_positions()
    target = restrict(source.values, unerased)
    message = solve_left(dual_generator.select_columns(unerased), target)
    if message is None:
        return None
    word = left_mul(message, dual_generator)
    return OracleWitness(u=restrict(word, pattern.erased_positions()), v=message, word=word)


def exhaustive_quantize(generator: SparseBinaryMatrix, source: ErasureWord) -> BitVector | None:
    """Scan every message, first message bit most significant, for an exact match."""
    _require_length(generator, source.length)
    if generator.rows > EXHAUSTIVE_MAX_ROWS:
        raise OracleLimitError(
            f"Exhaustive search supports at most {EXHAUSTIVE_MAX_ROWS} rows, got {generator.rows}",
        )
    row_masks = generator.row_masks()
    known = ~source.pattern.indicator.bits
    dimension = generator.rows
    for index in range(1 << dimension):
        codeword = 0
        for row_index, row_mask in enumerate(row_masks):
            if (index >> (dimension - 1 - row_index)) & 1:
                codeword ^= row_mask
        if not (codeword ^ source.values.bits) & known:
            return BitVector(generator.cols, codeword)
    return None


def quantize_with_parity_check(parity_check: SparseBinaryMatrix, source: ErasureWord) -> bool:
    """Whether some ``x`` with ``H xᵀ = 0`` matches ``source`` off its erasures."""
    _require_length(parity_check, source.length)
    erased = source.pattern.erased_positions()
    syndrome = mat_vec_mul(parity_check, source.values)
    return is_consistent(parity_check.select_columns(erased).row_masks(), syndrome.bits)


def pattern_quantizable_with_parity_check(
    parity_check: SparseBinaryMatrix,
    pattern: ErasurePattern,
    *,
    full_rank: int | None = None,
) -> bool:
    """Whether every source with erasures ``pattern`` has an exact codeword of ``null(H)``.

    Holds exactly when no nonzero combination of checks lives on the unerased
    positions, that is when the erased columns keep the full rank of ``H``.
    """
    _require_length(parity_check, pattern.length)
    if full_rank is None:
        full_rank = rank(parity_check)
    return rank(parity_check.select_columns(pattern.erased_positions())) == full_rank


def restrict(vector: BitVector, positions: tuple[int, ...]) -> BitVector:
    """Subvector on ``positions``, in the given order."""
    if not positions:
        return BitVector.zeros(0)
    return BitVector.from_array(vector.to_array()[np.asarray(positions, dtype=np.intp)])


def _require_length(matrix: SparseBinaryMatrix, length: int) -> None:
    if length != matrix.cols:
        raise DimensionMismatchError(f"Word has length {length}, matrix has {matrix.cols} columns")
