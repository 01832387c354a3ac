from __future__ import annotations

import logging

import numpy as np

from dualpeel.core.gf2 import BitVector, DimensionMismatchError, SparseBinaryMatrix
from dualpeel.core.iterative.models import (
    ErasureWord,
    QuantFailure,
    QuantOutcome,
    QuantSuccess,
    ReservationStack,
    TieBreak,
)
from dualpeel.core.iterative.worklist import IndexWorklist

logger = logging.getLogger(__name__)


def erasure_quantize(
    generator: SparseBinaryMatrix,
    source: ErasureWord,
    tie_break: TieBreak = TieBreak.zeros,
    *,
    seed: int | None = None,
) -> QuantOutcome:
    """Find message bits ``w`` with ``wG`` equal to ``source`` off its erasures.

    A message variable touching exactly one unerased position reserves it and
    the position is then treated as erased. Once every position is erased the
    unreserved variables are fixed by ``tie_break`` and reserved ones are
    solved in reverse reservation order.

    An unerased position covered by no message variable is never reserved, so
    it stalls the run whatever its value.
    """
    if source.length != generator.cols:
        raise DimensionMismatchError(
            f"Source has length {source.length}, generator matrix has {generator.cols} columns",
        )

    unerased = ~source.pattern.indicator.to_array().astype(bool)
    targets = source.values.to_array()
    counts = [0] * generator.rows
    unerased_xor = [0] * generator.rows
    for variable, support in enumerate(generator.row_supports()):
        for position in support:
            if unerased[position]:
                counts[variable] += 1
                unerased_xor[variable] ^= position

    eligible = IndexWorklist(generator.rows)
    for variable, count in enumerate(counts):
        if count == 1:
            eligible.push(variable)

    columns = generator.col_supports()
    reservations = ReservationStack()
    remaining = int(unerased.sum())
    iteration = 0
    while remaining:
        if not eligible:
            unsatisfied = tuple(np.flatnonzero(unerased).tolist())
            logger.debug("Quantizer stalled at iteration %d with %d unerased", iteration, remaining)
            return QuantFailure(iteration=iteration, unsatisfied=unsatisfied)

        variable = eligible.pop()
        position = unerased_xor[variable]
        reservations.push(variable, position)
        unerased[position] = False
        remaining -= 1
        iteration += 1
        for neighbour in columns[position]:
            counts[neighbour] -= 1
            unerased_xor[neighbour] ^= position
            if counts[neighbour] == 1:
                eligible.push(neighbour)
            elif counts[neighbour] == 0:
                eligible.discard(neighbour)

    message = _free_assignment(generator.rows, tie_break, seed)
    for variable, position in reservations.last_to_first():
        value = int(targets[position])
        for other in columns[position]:
            if other != variable:
                value ^= int(message[other])
        message[variable] = value

    codeword = np.zeros(generator.cols, dtype=np.uint8)
    for position, support in enumerate(columns):
        parity = 0
        for variable in support:
            parity ^= int(message[variable])
        codeword[position] = parity

    return QuantSuccess(
        message=BitVector.from_array(message),
        codeword=BitVector.from_array(codeword),
        reservations=reservations.as_tuple(),
        iterations=iteration,
    )


def _free_assignment(size: int, tie_break: TieBreak, seed: int | None) -> np.ndarray:
    if tie_break is TieBreak.random:
        return np.random.default_rng(seed).integers(0, 2, size=size, dtype=np.uint8)
    return np.zeros(size, dtype=np.uint8)
