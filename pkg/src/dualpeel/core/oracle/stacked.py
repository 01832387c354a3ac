"""Stacked selector systems for erasure patterns.

Optimal decoding of a pattern ``e`` and optimal quantization of its complement
reduce to the same block matrix once columns are ordered unerased-first for
the decoder (erased-first for the quantizer).
"""

from __future__ import annotations

from dataclasses import dataclass

from dualpeel.core.gf2 import DimensionMismatchError, SparseBinaryMatrix, rank
from dualpeel.core.iterative import ErasurePattern


@dataclass(frozen=True, slots=True)
class StackedSystem:
    """Selector rows stacked over a column-permuted code matrix.

    Column ``k`` of ``matrix`` is column ``order[k]`` of the original code.
    """

    matrix: SparseBinaryMatrix
    order: tuple[int, ...]
    selector_rows: int

    @property
    def n(self) -> int:
        return self.matrix.cols

    @property
    def code_rows(self) -> int:
        return self.matrix.rows - self.selector_rows

    def has_full_column_rank(self) -> bool:
        return rank(self.matrix) == self.matrix.cols


def build_stacked(parity_check: SparseBinaryMatrix, pattern: ErasurePattern) -> StackedSystem:
    """Identity rows for the unerased positions over ``H`` in unerased-first order."""
    _require_pattern_fits(parity_check, pattern)
    return _stack(parity_check, pattern.unerased_positions(), pattern.erased_positions())


def build_stacked_dual(
    dual_generator: SparseBinaryMatrix,
    dual_pattern: ErasurePattern,
) -> StackedSystem:
    """Identity rows for the erased source positions over ``G⊥`` in erased-first order.

    The free choices ``u`` multiply the identity rows, the dual message ``v``
    multiplies ``G⊥``.
    """
    _require_pattern_fits(dual_generator, dual_pattern)
    return _stack(
        dual_generator,
        dual_pattern.erased_positions(),
        dual_pattern.unerased_positions(),
    )


def _stack(
    code_matrix: SparseBinaryMatrix,
    selected: tuple[int, ...],
    rest: tuple[int, ...],
) -> StackedSystem:
    order = selected + rest
    selector = SparseBinaryMatrix(
        len(selected),
        code_matrix.cols,
        frozenset((index, index) for index in range(len(selected))),
    )
    return StackedSystem(
        matrix=selector.stack(code_matrix.permute_columns(order)),
        order=order,
        selector_rows=len(selected),
    )


def _require_pattern_fits(code_matrix: SparseBinaryMatrix, pattern: ErasurePattern) -> None:
    if pattern.length != code_matrix.cols:
        raise DimensionMismatchError(
            f"Pattern has length {pattern.length}, matrix has {code_matrix.cols} columns",
        )
