from __future__ import annotations

import itertools
import math

import pytest

from dualpeel.core.messages import (
    CONTRADICTION,
    Contradiction,
    DecSymbol,
    MessageDomainError,
    QuantSymbol,
    dec_prod,
    dec_prod_all,
    dec_sum,
    dec_sum_all,
    llr_fourier,
    llr_fourier_inverse,
    quant_prod,
    quant_prod_all,
    quant_sum,
    quant_sum_all,
)

DEC_SUM_ROWS = {"0": "01*", "1": "10*", "*": "***"}
DEC_PROD_ROWS = {"0": "0#0", "1": "#11", "*": "01*"}
QUANT_SUM_ROWS = {"0": "01*∅", "1": "10*∅", "*": "****", "∅": "∅∅*∅"}
QUANT_PROD_ROWS = {"0": "0#00", "1": "#111", "*": "01*∅", "∅": "01∅∅"}


def label(symbol: DecSymbol | QuantSymbol | Contradiction) -> str:
    return str(symbol.value)


def test_decoding_tables_follow_the_update_rules() -> None:
    for left, right in itertools.product(DecSymbol, repeat=2):
        column = list(DecSymbol).index(right)

        assert label(dec_sum(left, right)) == DEC_SUM_ROWS[left.value][column]
        assert label(dec_prod(left, right)) == DEC_PROD_ROWS[left.value][column]


def test_quantization_tables_follow_the_update_rules() -> None:
    for left, right in itertools.product(QuantSymbol, repeat=2):
        column = list(QuantSymbol).index(right)

        assert label(quant_sum(left, right)) == QUANT_SUM_ROWS[left.value][column]
        assert label(quant_prod(left, right)) == QUANT_PROD_ROWS[left.value][column]


def test_rules_are_commutative() -> None:
    for left, right in itertools.product(DecSymbol, repeat=2):
        assert dec_sum(left, right) == dec_sum(right, left)
        assert dec_prod(left, right) == dec_prod(right, left)
    for left, right in itertools.product(QuantSymbol, repeat=2):
        assert quant_sum(left, right) == quant_sum(right, left)
        assert quant_prod(left, right) == quant_prod(right, left)


def test_rules_are_associative_up_to_contradiction() -> None:
    for first, second, third in itertools.product(QuantSymbol, repeat=3):
        assert quant_sum(quant_sum(first, second), third) == quant_sum(
            first,
            quant_sum(second, third),
        )
        assert quant_prod_all([first, second, third]) == quant_prod_all([third, second, first])
    for first, second, third in itertools.product(DecSymbol, repeat=3):
        assert dec_sum(dec_sum(first, second), third) == dec_sum(first, dec_sum(second, third))
        assert dec_prod_all([first, second, third]) == dec_prod_all([third, first, second])


def test_sum_is_xor_on_known_values() -> None:
    assert dec_sum(DecSymbol.one, DecSymbol.one) is DecSymbol.zero
    assert quant_sum(QuantSymbol.zero, QuantSymbol.one) is QuantSymbol.one
    assert dec_sum_all([DecSymbol.one, DecSymbol.one, DecSymbol.one]) is DecSymbol.one
    assert dec_sum_all([DecSymbol.one, DecSymbol.erased]) is DecSymbol.erased
    assert dec_sum_all([]) is DecSymbol.zero


def test_quantization_null_message_rules() -> None:
    assert quant_sum(QuantSymbol.null, QuantSymbol.one) is QuantSymbol.null
    assert quant_sum(QuantSymbol.null, QuantSymbol.erased) is QuantSymbol.erased
    assert quant_prod(QuantSymbol.null, QuantSymbol.one) is QuantSymbol.one
    assert quant_prod(QuantSymbol.null, QuantSymbol.erased) is QuantSymbol.null
    assert quant_sum_all([QuantSymbol.one, QuantSymbol.null, QuantSymbol.one]) is QuantSymbol.null


def test_products_fold_to_contradiction() -> None:
    assert dec_prod(DecSymbol.zero, DecSymbol.one) is CONTRADICTION
    assert quant_prod_all([QuantSymbol.zero, QuantSymbol.null, QuantSymbol.one]) is CONTRADICTION
    same = [QuantSymbol.zero, QuantSymbol.null, QuantSymbol.zero]
    assert quant_prod_all(same) is QuantSymbol.zero
    assert quant_prod_all([]) is QuantSymbol.erased
    assert dec_prod_all([DecSymbol.erased, DecSymbol.one]) is DecSymbol.one
    assert dec_prod_all([]) is DecSymbol.erased


def test_llr_fourier_maps_known_and_erased_ratios() -> None:
    assert llr_fourier(3.0) == pytest.approx(-0.5)
    assert llr_fourier(1.0) == 0.0
    assert llr_fourier(0.0) == 1.0
    assert llr_fourier(math.inf) == -1.0
    assert llr_fourier_inverse(-1.0) == math.inf
    assert llr_fourier_inverse(0.0) == 1.0
    for ratio in (0.0, 0.25, 1.0, 4.0):
        assert llr_fourier_inverse(llr_fourier(ratio)) == pytest.approx(ratio)


def test_llr_fourier_rejects_values_outside_the_domain() -> None:
    with pytest.raises(MessageDomainError, match=">= 0"):
        llr_fourier(-0.5)
    with pytest.raises(MessageDomainError, match=">= 0"):
        llr_fourier(math.nan)
    with pytest.raises(MessageDomainError, match=r"\[-1, 1\]"):
        llr_fourier_inverse(1.5)
