from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from enum import StrEnum
from typing import Literal, TypeAlias

from dualpeel.core.gf2 import BitVector, DimensionMismatchError
from dualpeel.core.messages import DecSymbol


class TieBreak(StrEnum):
    zeros = "zeros"
    random = "random"


@dataclass(frozen=True, slots=True)
class ErasurePattern:
    """Indicator ``e`` with ``e_i = 1`` exactly at erased positions."""

    indicator: BitVector

    @classmethod
    def from_bits(cls, values: Iterable[int]) -> ErasurePattern:
        return cls(BitVector.from_bits(values))

    @classmethod
    def from_string(cls, text: str) -> ErasurePattern:
        return cls(BitVector.from_string(text))

    @classmethod
    def none(cls, length: int) -> ErasurePattern:
        return cls(BitVector.zeros(length))

    @classmethod
    def full(cls, length: int) -> ErasurePattern:
        return cls(BitVector.ones(length))

    @property
    def length(self) -> int:
        return self.indicator.length

    @property
    def weight(self) -> int:
        return self.indicator.weight

    def is_erased(self, position: int) -> bool:
        return bool(self.indicator[position])

    def erased_positions(self) -> tuple[int, ...]:
        return self.indicator.support()

    def unerased_positions(self) -> tuple[int, ...]:
        return (~self.indicator).support()

    def complement(self) -> ErasurePattern:
        return ErasurePattern(~self.indicator)


@dataclass(frozen=True, slots=True)
class ErasureWord:
    """Word over ``{0, 1, *}``: known values plus the erasure pattern.

    ``values`` is zero wherever the pattern marks an erasure.
    """

    values: BitVector
    pattern: ErasurePattern

    def __post_init__(self) -> None:
        if self.values.length != self.pattern.length:
            raise DimensionMismatchError(
                f"Values of length {self.values.length} do not match "
                f"pattern of length {self.pattern.length}",
            )
        if self.values.bits & self.pattern.indicator.bits:
            raise ValueError("Erased positions must carry a zero value")

    @classmethod
    def from_string(cls, text: str) -> ErasureWord:
        """Parse text such as ``"01*"``."""
        return cls.from_symbols(DecSymbol(character) for character in text)

    @classmethod
    def from_symbols(cls, symbols: Iterable[DecSymbol]) -> ErasureWord:
        values = 0
        erased = 0
        length = 0
        for position, symbol in enumerate(symbols):
            if symbol is DecSymbol.erased:
                erased |= 1 << position
            elif symbol is DecSymbol.one:
                values |= 1 << position
            length = position + 1
        return cls(BitVector(length, values), ErasurePattern(BitVector(length, erased)))

    @classmethod
    def through_pattern(cls, word: BitVector, pattern: ErasurePattern) -> ErasureWord:
        """Erase ``word`` wherever ``pattern`` is set."""
        masked = BitVector(word.length, word.bits & ~pattern.indicator.bits)
        return cls(masked, pattern)

    @classmethod
    def known(cls, word: BitVector) -> ErasureWord:
        return cls(word, ErasurePattern.none(word.length))

    @property
    def length(self) -> int:
        return self.values.length

    def __len__(self) -> int:
        return self.values.length

    def __iter__(self) -> Iterator[DecSymbol]:
        return iter(self.symbols)

    @property
    def symbols(self) -> tuple[DecSymbol, ...]:
        erased = self.pattern.indicator.bits
        values = self.values.bits
        return tuple(
            DecSymbol.erased
            if (erased >> position) & 1
            else (DecSymbol.one if (values >> position) & 1 else DecSymbol.zero)
            for position in range(self.length)
        )

    def to_string(self) -> str:
        return "".join(symbol.value for symbol in self.symbols)


def pattern_of(word: ErasureWord) -> ErasurePattern:
    return word.pattern


@dataclass(slots=True)
class ReservationStack:
    """Reservations ``(variable, position)`` in the order they were made."""

    _entries: list[tuple[int, int]] = field(default_factory=list)
    _variables: set[int] = field(default_factory=set)
    _positions: set[int] = field(default_factory=set)

    def push(self, variable: int, position: int) -> None:
        if variable in self._variables:
            raise ValueError(f"Variable {variable} is already reserved")
        if position in self._positions:
            raise ValueError(f"Position {position} already has a reserving variable")
        self._entries.append((variable, position))
        self._variables.add(variable)
        self._positions.add(position)

    def __len__(self) -> int:
        return len(self._entries)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self._entries)

    def __contains__(self, variable: object) -> bool:
        return variable in self._variables

    def last_to_first(self) -> Iterator[tuple[int, int]]:
        return reversed(self._entries)

    def as_tuple(self) -> tuple[tuple[int, int], ...]:
        return tuple(self._entries)


@dataclass(frozen=True, slots=True)
class DecodeSuccess:
    word: BitVector
    iterations: int
    succeeded: Literal[True] = True


@dataclass(frozen=True, slots=True)
class DecodeFailure:
    """Peeling stalled: no check saw exactly one erased variable.

    ``stopping_set`` lists the variables still erased at that point.
    """

    iteration: int
    stopping_set: tuple[int, ...]
    succeeded: Literal[False] = False

    @property
    def residual_erasures(self) -> int:
        return len(self.stopping_set)


@dataclass(frozen=True, slots=True)
class QuantSuccess:
    message: BitVector
    codeword: BitVector
    reservations: tuple[tuple[int, int], ...]
    iterations: int
    succeeded: Literal[True] = True


@dataclass(frozen=True, slots=True)
class QuantFailure:
    """Peeling stalled: no variable touched exactly one unerased position."""

    iteration: int
    unsatisfied: tuple[int, ...]
    succeeded: Literal[False] = False

    @property
    def residual_unerased(self) -> int:
        return len(self.unsatisfied)


DecodeOutcome: TypeAlias = DecodeSuccess | DecodeFailure
QuantOutcome: TypeAlias = QuantSuccess | QuantFailure
