from __future__ import annotations

from fractions import Fraction

import numpy as np

from dualpeel.core.gf2 import BitVector, DimensionMismatchError
from dualpeel.core.iterative.models import ErasurePattern, ErasureWord


def distortion(source: ErasureWord, reproduction: BitVector) -> float:
    """Fraction of unerased source positions the reproduction gets wrong.

    Erased positions never count against the reproduction. The average is over
    all ``n`` positions; an empty word has distortion zero.
    """
    return float(exact_distortion(source, reproduction))


def exact_distortion(source: ErasureWord, reproduction: BitVector) -> Fraction:
    if source.length != reproduction.length:
        raise DimensionMismatchError(
            f"Source has length {source.length}, reproduction has {reproduction.length}",
        )
    if source.length == 0:
        return Fraction(0)
    known = ~source.pattern.indicator.bits
    mismatches = (source.values.bits ^ reproduction.bits) & known
    return Fraction(mismatches.bit_count(), source.length)


def complement_pattern(pattern: ErasurePattern) -> ErasurePattern:
    return pattern.complement()


def matches_unerased(source: ErasureWord, word: BitVector) -> bool:
    return exact_distortion(source, word) == 0


def erasure_fraction(pattern: ErasurePattern) -> float:
    if pattern.length == 0:
        return 0.0
    return float(np.mean(pattern.indicator.to_array()))
