from __future__ import annotations

from dualpeel.core.gf2.errors import BitIndexError, DimensionMismatchError
from dualpeel.core.gf2.linalg import (
    ReducedSystem,
    RightSolution,
    dualize,
    is_codeword,
    is_consistent,
    left_mul,
    mat_vec_mul,
    nullspace,
    rank,
    rank_of_masks,
    reduce_system,
    solve_left,
    solve_right,
)
from dualpeel.core.gf2.matrix import SparseBinaryMatrix
from dualpeel.core.gf2.vectors import BitVector

__all__ = (
    "BitIndexError",
    "BitVector",
    "DimensionMismatchError",
    "ReducedSystem",
    "RightSolution",
    "SparseBinaryMatrix",
    "dualize",
    "is_codeword",
    "is_consistent",
    "left_mul",
    "mat_vec_mul",
    "nullspace",
    "rank",
    "rank_of_masks",
    "reduce_system",
    "solve_left",
    "solve_right",
)
