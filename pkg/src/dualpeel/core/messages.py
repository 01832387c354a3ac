"""Erasure message algebras for decoding and quantization.

Decoding messages live in ``{0, 1, *}``; quantization adds the null message
``∅`` for "not yet determined". Products may produce a contradiction, which is
returned as :data:`CONTRADICTION` rather than as a symbol.
"""

from __future__ import annotations

import math
from collections.abc import Callable, Iterable, Mapping
from enum import Enum, StrEnum
from functools import reduce
from types import MappingProxyType
from typing import TypeAlias, TypeVar


class DecSymbol(StrEnum):
    zero = "0"
    one = "1"
    erased = "*"


class QuantSymbol(StrEnum):
    zero = "0"
    one = "1"
    erased = "*"
    null = "∅"


class Contradiction(Enum):
    contradiction = "#"


CONTRADICTION = Contradiction.contradiction

DecProduct: TypeAlias = DecSymbol | Contradiction
QuantProduct: TypeAlias = QuantSymbol | Contradiction
SymbolT = TypeVar("SymbolT", DecSymbol, QuantSymbol)


class MessageDomainError(ValueError):
    """Raised when a numeric message is outside its domain."""


def _table(rows: str, symbols: Iterable[Enum]) -> Mapping[tuple[str, str], str]:
    labels = [str(symbol.value) for symbol in symbols]
    table: dict[tuple[str, str], str] = {}
    for left, line in zip(labels, rows.split(), strict=True):
        for right, cell in zip(labels, line, strict=True):
            table[left, right] = cell
    return MappingProxyType(table)


_DEC_SUM = _table("01* 10* ***", DecSymbol)
_DEC_PROD = _table("0#0 #11 01*", DecSymbol)
_QUANT_SUM = _table("01*∅ 10*∅ **** ∅∅*∅", QuantSymbol)
_QUANT_PROD = _table("0#00 #111 01*∅ 01∅∅", QuantSymbol)


def dec_sum(left: DecSymbol, right: DecSymbol) -> DecSymbol:
    """``+``-node rule: modulo-2 sum, erased if either side is erased."""
    return DecSymbol(_DEC_SUM[left.value, right.value])


def dec_prod(left: DecSymbol, right: DecSymbol) -> DecProduct:
    """``=``-node rule: agree on known values, contradict on 0 against 1."""
    return _product(_DEC_PROD[left.value, right.value], DecSymbol)


def quant_sum(left: QuantSymbol, right: QuantSymbol) -> QuantSymbol:
    return QuantSymbol(_QUANT_SUM[left.value, right.value])


def quant_prod(left: QuantSymbol, right: QuantSymbol) -> QuantProduct:
    return _product(_QUANT_PROD[left.value, right.value], QuantSymbol)


def dec_sum_all(symbols: Iterable[DecSymbol]) -> DecSymbol:
    return reduce(dec_sum, symbols, DecSymbol.zero)


def dec_prod_all(symbols: Iterable[DecSymbol]) -> DecProduct:
    return _fold_product(symbols, dec_prod, DecSymbol.erased)


def quant_sum_all(symbols: Iterable[QuantSymbol]) -> QuantSymbol:
    return reduce(quant_sum, symbols, QuantSymbol.zero)


def quant_prod_all(symbols: Iterable[QuantSymbol]) -> QuantProduct:
    """Fold with ``×``; ``*`` is the identity of the table."""
    return _fold_product(symbols, quant_prod, QuantSymbol.erased)


def llr_fourier(likelihood_ratio: float) -> float:
    """Map a likelihood ratio ``λ >= 0`` to ``Λ = (1 - λ) / (1 + λ)``.

    Known ratios (0 or +inf) land on ±1 and the erased ratio 1 lands on 0.
    """
    if math.isnan(likelihood_ratio) or likelihood_ratio < 0:
        raise MessageDomainError(f"Likelihood ratio must be >= 0, got {likelihood_ratio}")
    if math.isinf(likelihood_ratio):
        return -1.0
    return (1.0 - likelihood_ratio) / (1.0 + likelihood_ratio)


def llr_fourier_inverse(transform: float) -> float:
    """Recover ``λ`` from ``Λ`` in ``[-1, 1]``; the map is its own inverse."""
    if math.isnan(transform) or not -1.0 <= transform <= 1.0:
        raise MessageDomainError(f"Transform must lie in [-1, 1], got {transform}")
    if transform == -1.0:
        return math.inf
    return (1.0 - transform) / (1.0 + transform)


def _product(cell: str, symbol_type: type[SymbolT]) -> SymbolT | Contradiction:
    if cell == CONTRADICTION.value:
        return CONTRADICTION
    return symbol_type(cell)


def _fold_product(
    symbols: Iterable[SymbolT],
    rule: Callable[[SymbolT, SymbolT], SymbolT | Contradiction],
    identity: SymbolT,
) -> SymbolT | Contradiction:
    accumulated = identity
    for symbol in symbols:
        combined = rule(accumulated, symbol)
        if isinstance(combined, Contradiction):
            return CONTRADICTION
        accumulated = combined
    return accumulated
