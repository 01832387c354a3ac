from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

from dualpeel.core.gf2.errors import BitIndexError, DimensionMismatchError

Entry = tuple[int, int]


@dataclass(frozen=True, slots=True)
class SparseBinaryMatrix:
    """Immutable GF(2) matrix stored as the set of positions holding 1.

    Row and column supports are cached at construction so graph algorithms can
    walk adjacency without touching the entry set again.
    """

    rows: int
    cols: int
    entries: frozenset[Entry] = frozenset()
    _row_support: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)
    _col_support: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError(f"Matrix shape must be non-negative, got {self.rows}x{self.cols}")
        row_lists: list[list[int]] = [[] for _ in range(self.rows)]
        col_lists: list[list[int]] = [[] for _ in range(self.cols)]
        for row_index, col_index in self.entries:
            if not (0 <= row_index < self.rows and 0 <= col_index < self.cols):
                raise BitIndexError(
                    f"Entry ({row_index}, {col_index}) outside {self.rows}x{self.cols}",
                )
            row_lists[row_index].append(col_index)
            col_lists[col_index].append(row_index)
        object.__setattr__(self, "_row_support", tuple(tuple(sorted(r)) for r in row_lists))
        object.__setattr__(self, "_col_support", tuple(tuple(sorted(c)) for c in col_lists))

    @classmethod
    def from_rows(cls, row_supports: Sequence[Iterable[int]], cols: int) -> SparseBinaryMatrix:
        """Build a matrix from per-row column positions.

        Repeated positions inside one row cancel pairwise, as they would over GF(2).
        """
        entries: set[Entry] = set()
        for row_index, support in enumerate(row_supports):
            for col_index in support:
                entries.symmetric_difference_update({(row_index, col_index)})
        return cls(len(row_supports), cols, frozenset(entries))

    @classmethod
    def from_dense(cls, dense: Sequence[Sequence[int]]) -> SparseBinaryMatrix:
        cols = len(dense[0]) if dense else 0
        for row_values in dense:
            if len(row_values) != cols:
                raise DimensionMismatchError("Dense rows must all have the same length")
        return cls.from_rows(
            [[col for col, bit_value in enumerate(row) if bit_value & 1] for row in dense],
            cols,
        )

    @classmethod
    def from_row_masks(cls, masks: Sequence[int], cols: int) -> SparseBinaryMatrix:
        return cls.from_rows(
            [[col for col in range(cols) if (mask >> col) & 1] for mask in masks],
            cols,
        )

    @classmethod
    def identity(cls, size: int) -> SparseBinaryMatrix:
        return cls(size, size, frozenset((index, index) for index in range(size)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> SparseBinaryMatrix:
        return cls(rows, cols)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def nnz(self) -> int:
        return len(self.entries)

    def row_support(self, row_index: int) -> tuple[int, ...]:
        return self._row_support[row_index]

    def col_support(self, col_index: int) -> tuple[int, ...]:
        return self._col_support[col_index]

    def row_supports(self) -> tuple[tuple[int, ...], ...]:
        return self._row_support

    def col_supports(self) -> tuple[tuple[int, ...], ...]:
        return self._col_support

    def row_degrees(self) -> list[int]:
        return [len(support) for support in self._row_support]

    def col_degrees(self) -> list[int]:
        return [len(support) for support in self._col_support]

    def row_masks(self) -> list[int]:
        """Rows packed as integers, bit ``j`` set when column ``j`` holds 1."""
        return [sum(1 << col for col in support) for support in self._row_support]

    def col_masks(self) -> list[int]:
        return [sum(1 << row for row in support) for support in self._col_support]

    def to_dense(self) -> list[list[int]]:
        dense = [[0] * self.cols for _ in range(self.rows)]
        for row_index, col_index in self.entries:
            dense[row_index][col_index] = 1
        return dense

    def transpose(self) -> SparseBinaryMatrix:
        return SparseBinaryMatrix(
            self.cols,
            self.rows,
            frozenset((col, row) for row, col in self.entries),
        )

    def select_columns(self, columns: Sequence[int]) -> SparseBinaryMatrix:
        """Return the submatrix on ``columns``, renumbered in the given order."""
        position = {col: new_col for new_col, col in enumerate(columns)}
        if len(position) != len(columns):
            raise ValueError("Selected columns must be distinct")
        return SparseBinaryMatrix(
            self.rows,
            len(columns),
            frozenset(
                (row, position[col]) for row, col in self.entries if col in position
            ),
        )

    def permute_columns(self, order: Sequence[int]) -> SparseBinaryMatrix:
        """Reorder columns so new column ``k`` is old column ``order[k]``."""
        if sorted(order) != list(range(self.cols)):
            raise ValueError("Column order must be a permutation of all columns")
        return self.select_columns(order)

    def stack(self, lower: SparseBinaryMatrix) -> SparseBinaryMatrix:
        """Place ``lower`` underneath this matrix."""
        if lower.cols != self.cols:
            raise DimensionMismatchError(
                f"Cannot stack {self.cols}-column and {lower.cols}-column matrices",
            )
        shifted = frozenset((row + self.rows, col) for row, col in lower.entries)
        return SparseBinaryMatrix(self.rows + lower.rows, self.cols, self.entries | shifted)
