from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from dualpeel.core.gf2.errors import BitIndexError, DimensionMismatchError


@dataclass(frozen=True, slots=True)
class BitVector:
    """Fixed-length GF(2) word packed into a Python integer.

    Bit ``i`` of the word is ``(bits >> i) & 1``.
    """

    length: int
    bits: int = 0

    def __post_init__(self) -> None:
        if self.length < 0:
            raise ValueError(f"BitVector length must be non-negative, got {self.length}")
        if self.bits < 0 or self.bits >> self.length:
            raise BitIndexError(f"Packed bits exceed length {self.length}")

    @classmethod
    def zeros(cls, length: int) -> BitVector:
        return cls(length)

    @classmethod
    def ones(cls, length: int) -> BitVector:
        return cls(length, (1 << length) - 1)

    @classmethod
    def from_array(cls, values: npt.ArrayLike) -> BitVector:
        """Pack a one-dimensional array of 0/1 values."""
        array = np.asarray(values)
        if array.ndim != 1:
            raise DimensionMismatchError(f"Expected a one-dimensional array, got {array.ndim} dims")
        invalid = np.flatnonzero((array != 0) & (array != 1))
        if invalid.size:
            position = int(invalid[0])
            raise ValueError(f"Bit {position} must be 0 or 1, got {array[position]!r}")
        packed = np.packbits(array.astype(np.uint8), bitorder="little").tobytes()
        return cls(int(array.size), int.from_bytes(packed, "little"))

    @classmethod
    def from_bits(cls, values: Iterable[int]) -> BitVector:
        """Pack a sequence of 0/1 values."""
        return cls.from_array(np.fromiter(values, dtype=np.int64))

    @classmethod
    def from_positions(cls, length: int, positions: Iterable[int]) -> BitVector:
        """Build a word whose support is ``positions``."""
        indicator = np.zeros(length, dtype=np.uint8)
        for position in positions:
            if not 0 <= position < length:
                raise BitIndexError(f"Position {position} outside length {length}")
            indicator[position] = 1
        return cls.from_array(indicator)

    @classmethod
    def from_string(cls, text: str) -> BitVector:
        return cls.from_bits(int(character) for character in text)

    def to_array(self) -> npt.NDArray[np.uint8]:
        raw = self.bits.to_bytes((self.length + 7) // 8, "little")
        return np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little")[: self.length]

    def __len__(self) -> int:
        return self.length

    def __getitem__(self, position: int) -> int:
        if not 0 <= position < self.length:
            raise BitIndexError(f"Position {position} outside length {self.length}")
        return (self.bits >> position) & 1

    def __iter__(self) -> Iterator[int]:
        return iter(self.to_array().tolist())

    def __xor__(self, other: BitVector) -> BitVector:
        self._require_same_length(other)
        return BitVector(self.length, self.bits ^ other.bits)

    def __and__(self, other: BitVector) -> BitVector:
        self._require_same_length(other)
        return BitVector(self.length, self.bits & other.bits)

    def __invert__(self) -> BitVector:
        return BitVector(self.length, self.bits ^ ((1 << self.length) - 1))

    @property
    def weight(self) -> int:
        """Number of one bits."""
        return self.bits.bit_count()

    def support(self) -> tuple[int, ...]:
        """Positions holding a one, ascending."""
        return tuple(np.flatnonzero(self.to_array()).tolist())

    def to_list(self) -> list[int]:
        return list(self)

    def to_string(self) -> str:
        return "".join(str(bit_value) for bit_value in self)

    def set(self, position: int, bit_value: int) -> BitVector:
        """Return a copy with one position replaced."""
        if not 0 <= position < self.length:
            raise BitIndexError(f"Position {position} outside length {self.length}")
        cleared = self.bits & ~(1 << position)
        return BitVector(self.length, cleared | ((bit_value & 1) << position))

    def _require_same_length(self, other: BitVector) -> None:
        if other.length != self.length:
            raise DimensionMismatchError(
                f"Cannot combine words of length {self.length} and {other.length}",
            )
