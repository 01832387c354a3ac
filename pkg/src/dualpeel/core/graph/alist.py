from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from dualpeel.core.gf2 import SparseBinaryMatrix

HEADER_LINES = 4


class AlistFormatError(ValueError):
    """Raised when alist text does not describe a consistent matrix."""


@dataclass(frozen=True, slots=True)
class AlistCodec:
    """Read and write parity-check matrices in MacKay's alist format."""

    def dumps(self, matrix: SparseBinaryMatrix) -> str:
        col_degrees = matrix.col_degrees()
        row_degrees = matrix.row_degrees()
        max_col = max(col_degrees, default=0)
        max_row = max(row_degrees, default=0)
        lines = [
            _join([matrix.cols, matrix.rows]),
            _join([max_col, max_row]),
            _join(col_degrees),
            _join(row_degrees),
        ]
        lines.extend(_padded(matrix.col_support(col), max_col) for col in range(matrix.cols))
        lines.extend(_padded(matrix.row_support(row), max_row) for row in range(matrix.rows))
        return "".join(f"{line}\n" for line in lines)

    def loads(self, text: str) -> SparseBinaryMatrix:
        """Parse alist text.

        The check-perspective block is optional; when present it must agree with
        the variable-perspective block.

        Raises:
            AlistFormatError: If the text is malformed or self-inconsistent.

        """
        rows_of_ints = [_parse_line(line, number) for number, line in _numbered(text)]
        if len(rows_of_ints) < HEADER_LINES:
            raise AlistFormatError("alist needs at least four header lines")
        n, m = _pair(rows_of_ints[0], "size")
        _pair(rows_of_ints[1], "max degree")
        col_degrees = _counts(rows_of_ints[2], n, "column degree")
        row_degrees = _counts(rows_of_ints[3], m, "row degree")
        body = rows_of_ints[HEADER_LINES:]
        if len(body) not in {n, n + m}:
            raise AlistFormatError(
                f"Expected {n} or {n + m} adjacency lines, found {len(body)}",
            )
        entries = self._column_entries(body[:n], col_degrees, m)
        if len(body) == n + m:
            self._check_rows(body[n:], row_degrees, n, entries)
        matrix = SparseBinaryMatrix(m, n, frozenset(entries))
        if matrix.row_degrees() != row_degrees:
            raise AlistFormatError("Row degrees do not match the column lists")
        return matrix

    def read(self, path: Path) -> SparseBinaryMatrix:
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as exc:
            raise AlistFormatError(f"Could not read alist {path}: {exc}") from exc
        return self.loads(text)

    def write(self, path: Path, matrix: SparseBinaryMatrix) -> None:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(self.dumps(matrix), encoding="utf-8")

    def _column_entries(
        self,
        lines: list[list[int]],
        col_degrees: list[int],
        m: int,
    ) -> set[tuple[int, int]]:
        entries: set[tuple[int, int]] = set()
        for col, (positions, degree) in enumerate(zip(lines, col_degrees, strict=True)):
            rows = _positions(positions, degree, m, f"column {col + 1}")
            entries.update((row, col) for row in rows)
        return entries

    def _check_rows(
        self,
        lines: list[list[int]],
        row_degrees: list[int],
        n: int,
        entries: set[tuple[int, int]],
    ) -> None:
        from_rows: set[tuple[int, int]] = set()
        for row, (positions, degree) in enumerate(zip(lines, row_degrees, strict=True)):
            cols = _positions(positions, degree, n, f"row {row + 1}")
            from_rows.update((row, col) for col in cols)
        if from_rows != entries:
            raise AlistFormatError("Row lists disagree with column lists")


def _numbered(text: str) -> list[tuple[int, str]]:
    numbered = list(enumerate(text.splitlines(), start=1))
    while numbered and not numbered[-1][1].strip():
        numbered.pop()
    return numbered


def _parse_line(line: str, number: int) -> list[int]:
    try:
        return [int(token) for token in line.split()]
    except ValueError as exc:
        raise AlistFormatError(f"Line {number} holds a non-integer token") from exc


def _pair(values: list[int], label: str) -> tuple[int, int]:
    if len(values) != 2 or min(values) < 0:
        raise AlistFormatError(f"Header {label} line must hold two non-negative integers")
    return values[0], values[1]


def _counts(values: list[int], expected: int, label: str) -> list[int]:
    if len(values) != expected:
        raise AlistFormatError(f"Expected {expected} {label} values, found {len(values)}")
    return values


def _positions(values: list[int], degree: int, bound: int, label: str) -> list[int]:
    nonzero = [value for value in values if value]
    if len(nonzero) != degree or len(set(nonzero)) != degree:
        raise AlistFormatError(f"{label.capitalize()} declares degree {degree}")
    if any(not 1 <= value <= bound for value in nonzero):
        raise AlistFormatError(f"{label.capitalize()} references a position outside 1..{bound}")
    return [value - 1 for value in nonzero]


def _join(values: list[int]) -> str:
    return " ".join(str(value) for value in values)


def _padded(positions: tuple[int, ...], width: int) -> str:
    one_indexed = [position + 1 for position in positions]
    return _join(one_indexed + [0] * (width - len(one_indexed)))
