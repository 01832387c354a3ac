from __future__ import annotations

import logging

import numpy as np

from dualpeel.core.gf2 import BitVector, DimensionMismatchError, SparseBinaryMatrix
from dualpeel.core.iterative.models import DecodeFailure, DecodeOutcome, DecodeSuccess, ErasureWord
from dualpeel.core.iterative.worklist import IndexWorklist

logger = logging.getLogger(__name__)


def erasure_decode(parity_check: SparseBinaryMatrix, received: ErasureWord) -> DecodeOutcome:
    """Peel erasures off ``received`` one check at a time.

    Each check keeps a count of its erased variables, the XOR of their indices
    and the XOR of its known bits. A check with count one therefore names its
    lone erased variable and that variable's value directly.
    """
    if received.length != parity_check.cols:
        raise DimensionMismatchError(
            f"Received word has length {received.length}, "
            f"parity-check matrix has {parity_check.cols} columns",
        )

    erased = received.pattern.indicator.to_array().astype(bool)
    word = received.values.to_array().copy()
    counts = [0] * parity_check.rows
    erased_xor = [0] * parity_check.rows
    partial = [0] * parity_check.rows
    for check, support in enumerate(parity_check.row_supports()):
        for variable in support:
            if erased[variable]:
                counts[check] += 1
                erased_xor[check] ^= variable
            else:
                partial[check] ^= int(word[variable])

    eligible = IndexWorklist(parity_check.rows)
    for check, count in enumerate(counts):
        if count == 1:
            eligible.push(check)

    columns = parity_check.col_supports()
    remaining = int(erased.sum())
    iteration = 0
    while remaining:
        if not eligible:
            stopping_set = tuple(np.flatnonzero(erased).tolist())
            logger.debug("Peeling stalled at iteration %d with %d erasures", iteration, remaining)
            return DecodeFailure(iteration=iteration, stopping_set=stopping_set)

        check = eligible.pop()
        variable = erased_xor[check]
        value = partial[check]
        word[variable] = value
        erased[variable] = False
        remaining -= 1
        iteration += 1
        for neighbour in columns[variable]:
            counts[neighbour] -= 1
            erased_xor[neighbour] ^= variable
            partial[neighbour] ^= value
            if counts[neighbour] == 1:
                eligible.push(neighbour)
            elif counts[neighbour] == 0:
                eligible.discard(neighbour)

    return DecodeSuccess(word=BitVector.from_array(word), iterations=iteration)
