"""Dense bit-packed elimination kernels.

Rows are packed into Python integers; elimination pivots on the first nonzero
entry in column order so every solver returns a reproducible witness.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from dualpeel.core.gf2.errors import DimensionMismatchError
from dualpeel.core.gf2.matrix import SparseBinaryMatrix
from dualpeel.core.gf2.vectors import BitVector


@dataclass(frozen=True, slots=True)
class RightSolution:
    """A witness ``x`` with ``Mx = b`` and whether it is the only one."""

    solution: BitVector
    rank: int

    @property
    def unique(self) -> bool:
        return self.rank == self.solution.length


@dataclass(frozen=True, slots=True)
class ReducedSystem:
    """Reduced row echelon form of ``[M | b]``."""

    rows: tuple[int, ...]
    pivots: tuple[int, ...]
    cols: int
    consistent: bool

    @property
    def rank(self) -> int:
        return len(self.pivots)


def mat_vec_mul(matrix: SparseBinaryMatrix, vector: BitVector) -> BitVector:
    """Right product ``M vᵀ``; bit ``i`` is the parity of ``v`` over row ``i``."""
    if vector.length != matrix.cols:
        raise DimensionMismatchError(
            f"Vector length {vector.length} does not match {matrix.cols} columns",
        )
    product = 0
    for row_index, row_mask in enumerate(matrix.row_masks()):
        product |= ((row_mask & vector.bits).bit_count() & 1) << row_index
    return BitVector(matrix.rows, product)


def left_mul(vector: BitVector, matrix: SparseBinaryMatrix) -> BitVector:
    """Left product ``v M``: XOR of the rows selected by ``v``."""
    if vector.length != matrix.rows:
        raise DimensionMismatchError(
            f"Vector length {vector.length} does not match {matrix.rows} rows",
        )
    product = 0
    for row_index, row_mask in enumerate(matrix.row_masks()):
        if (vector.bits >> row_index) & 1:
            product ^= row_mask
    return BitVector(matrix.cols, product)


def is_codeword(parity_check: SparseBinaryMatrix, word: BitVector) -> bool:
    return mat_vec_mul(parity_check, word).bits == 0


def rank(matrix: SparseBinaryMatrix) -> int:
    return rank_of_masks(matrix.row_masks())


def rank_of_masks(masks: Sequence[int]) -> int:
    """GF(2) rank of packed rows using a basis keyed by leading bit."""
    basis: dict[int, int] = {}
    for row_mask in masks:
        reduced = row_mask
        while reduced:
            leading = reduced.bit_length() - 1
            basis_row = basis.get(leading)
            if basis_row is None:
                basis[leading] = reduced
                break
            reduced ^= basis_row
    return len(basis)


def is_consistent(masks: Sequence[int], rhs: int) -> bool:
    """Whether ``M x = b`` has a solution, ``M`` given as packed rows.

    The right-hand side rides in bit 0 after the coefficients are shifted up, so
    a row that reduces to exactly ``1`` is the contradiction ``0 = 1``.
    """
    basis: dict[int, int] = {}
    for row_index, row_mask in enumerate(masks):
        reduced = (row_mask << 1) | ((rhs >> row_index) & 1)
        while reduced:
            leading = reduced.bit_length() - 1
            basis_row = basis.get(leading)
            if basis_row is None:
                if reduced == 1:
                    return False
                basis[leading] = reduced
                break
            reduced ^= basis_row
    return True


def reduce_system(matrix: SparseBinaryMatrix, rhs: BitVector) -> ReducedSystem:
    """Gauss-Jordan elimination of the augmented system ``[M | b]``."""
    if rhs.length != matrix.rows:
        raise DimensionMismatchError(
            f"Right-hand side length {rhs.length} does not match {matrix.rows} rows",
        )
    augment_bit = 1 << matrix.cols
    work = [
        row_mask | (augment_bit if (rhs.bits >> row_index) & 1 else 0)
        for row_index, row_mask in enumerate(matrix.row_masks())
    ]
    pivots: list[int] = []
    pivot_row = 0
    for col in range(matrix.cols):
        if pivot_row == len(work):
            break
        col_bit = 1 << col
        found = _find_pivot(work, pivot_row, col_bit)
        if found is None:
            continue
        work[pivot_row], work[found] = work[found], work[pivot_row]
        pivot_mask = work[pivot_row]
        for row_index, row_mask in enumerate(work):
            if row_index != pivot_row and row_mask & col_bit:
                work[row_index] = row_mask ^ pivot_mask
        pivots.append(col)
        pivot_row += 1
    consistent = all(row_mask != augment_bit for row_mask in work[pivot_row:])
    return ReducedSystem(
        rows=tuple(work[:pivot_row]),
        pivots=tuple(pivots),
        cols=matrix.cols,
        consistent=consistent,
    )


def solve_right(matrix: SparseBinaryMatrix, rhs: BitVector) -> RightSolution | None:
    """Solve ``M xᵀ = bᵀ``; free variables are set to zero.

    Returns:
        The witness and a uniqueness flag, or ``None`` when inconsistent.

    """
    reduced = reduce_system(matrix, rhs)
    if not reduced.consistent:
        return None
    augment_bit = 1 << reduced.cols
    solution = 0
    for pivot_col, row_mask in zip(reduced.pivots, reduced.rows, strict=True):
        if row_mask & augment_bit:
            solution |= 1 << pivot_col
    return RightSolution(
        solution=BitVector(reduced.cols, solution),
        rank=reduced.rank,
    )


def solve_left(matrix: SparseBinaryMatrix, target: BitVector) -> BitVector | None:
    """Solve ``w M = z`` by solving the transposed right system."""
    if target.length != matrix.cols:
        raise DimensionMismatchError(
            f"Target length {target.length} does not match {matrix.cols} columns",
        )
    found = solve_right(matrix.transpose(), target)
    if found is None:
        return None
    return found.solution


def nullspace(matrix: SparseBinaryMatrix) -> SparseBinaryMatrix:
    """Basis of ``{x : M xᵀ = 0}`` as the rows of a matrix."""
    reduced = reduce_system(matrix, BitVector.zeros(matrix.rows))
    pivot_set = set(reduced.pivots)
    basis_rows: list[int] = []
    for free_col in range(matrix.cols):
        if free_col in pivot_set:
            continue
        vector = 1 << free_col
        for pivot_col, row_mask in zip(reduced.pivots, reduced.rows, strict=True):
            if (row_mask >> free_col) & 1:
                vector |= 1 << pivot_col
        basis_rows.append(vector)
    return SparseBinaryMatrix.from_row_masks(basis_rows, matrix.cols)


def dualize(parity_check: SparseBinaryMatrix) -> SparseBinaryMatrix:
    """Reinterpret a parity-check matrix as the generator of the dual code.

    The matrix is returned unchanged; only the caller's reading of its rows
    changes, from checks on ``C`` to basis vectors of ``C⊥``.
    """
    return parity_check


def _find_pivot(work: list[int], start: int, col_bit: int) -> int | None:
    for row_index in range(start, len(work)):
        if work[row_index] & col_bit:
            return row_index
    return None
