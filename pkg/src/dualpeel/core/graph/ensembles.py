from __future__ import annotations

import logging
from collections import Counter
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from dualpeel.core.gf2 import SparseBinaryMatrix
from dualpeel.core.graph.models import (
    DegreeDistribution,
    DegreeDistributionError,
    node_counts,
)

logger = logging.getLogger(__name__)


class EnsembleError(ValueError):
    """Raised when ensemble parameters cannot produce a code."""


@dataclass(frozen=True, slots=True)
class SampledCode:
    """A sampled parity-check matrix with its socket-collision shortfall."""

    matrix: SparseBinaryMatrix
    design_edges: int
    shortfall: int

    @property
    def edges(self) -> int:
        return self.matrix.nnz


@dataclass(frozen=True, slots=True)
class SocketSampler:
    """Socket-permutation construction over a fixed pair of degree sequences.

    Variable sockets are shuffled against check sockets laid out in order. A
    socket that lands on an already occupied ``(check, variable)`` pair is
    swapped with another socket, drawn from the same seeded stream, so that
    both land on unused pairs. Collisions no swap can clear cancel in pairs,
    the way repeated entries cancel over GF(2), and are reported as the
    shortfall.
    """

    seed: int

    def sample(self, variable_degrees: Sequence[int], check_degrees: Sequence[int]) -> SampledCode:
        variable_sockets = np.repeat(np.arange(len(variable_degrees)), variable_degrees)
        check_sockets = np.repeat(np.arange(len(check_degrees)), check_degrees)
        if variable_sockets.size != check_sockets.size:
            raise EnsembleError(
                f"Socket counts differ: {variable_sockets.size} variable "
                f"vs {check_sockets.size} check",
            )
        rng = np.random.default_rng(self.seed)
        checks = check_sockets.tolist()
        variables = rng.permutation(variable_sockets).tolist()
        multiplicity = _repair_collisions(checks, variables, rng)
        entries = frozenset(pair for pair, count in multiplicity.items() if count % 2)
        design_edges = int(variable_sockets.size)
        shortfall = design_edges - len(entries)
        if shortfall:
            logger.debug(
                "Socket collisions removed %d of %d edges (seed=%d)",
                shortfall,
                design_edges,
                self.seed,
            )
        matrix = SparseBinaryMatrix(len(check_degrees), len(variable_degrees), entries)
        return SampledCode(matrix=matrix, design_edges=design_edges, shortfall=shortfall)


def _repair_collisions(
    checks: list[int],
    variables: list[int],
    rng: np.random.Generator,
) -> Counter[tuple[int, int]]:
    """Move repeated sockets onto fresh pairs in place and return the pair counts.

    A swap only ever creates pairs whose count was zero, so a pass in socket
    order never brings back a collision it already cleared.
    """
    multiplicity = Counter(zip(checks, variables, strict=True))
    for index, check in enumerate(checks):
        variable = variables[index]
        if multiplicity[check, variable] < 2:
            continue
        for other in rng.permutation(len(variables)).tolist():
            other_check, other_variable = checks[other], variables[other]
            if (
                other_check == check
                or other_variable == variable
                or multiplicity[check, other_variable]
                or multiplicity[other_check, variable]
            ):
                continue
            variables[index], variables[other] = other_variable, variable
            multiplicity[check, variable] -= 1
            multiplicity[other_check, other_variable] -= 1
            multiplicity[check, other_variable] += 1
            multiplicity[other_check, variable] += 1
            break
    return multiplicity


def sample_regular_code(n: int, dv: int, dc: int, seed: int) -> SampledCode:
    if dv < 1 or dc < 2:
        raise EnsembleError(f"Need dv >= 1 and dc >= 2, got dv={dv}, dc={dc}")
    if n < 0 or (n * dv) % dc:
        raise EnsembleError(f"n*dv = {n * dv} is not divisible by dc = {dc}")
    m = n * dv // dc
    return SocketSampler(seed).sample([dv] * n, [dc] * m)


def sample_regular_ldpc(n: int, dv: int, dc: int, seed: int) -> SparseBinaryMatrix:
    """Sample an ``(n·dv/dc) × n`` matrix from the ``(dv, dc)``-regular ensemble."""
    return sample_regular_code(n, dv, dc, seed).matrix


def sample_irregular_code(n: int, dist: DegreeDistribution, seed: int) -> SampledCode:
    variable_counts = node_counts(dist.variable, n)
    variable_degrees = _expand(variable_counts)
    total_edges = sum(variable_degrees)
    m = round(total_edges / dist.mean_check_degree)
    if m < 1:
        raise EnsembleError(f"Distribution implies no check nodes for n={n}")
    check_degrees = _expand(node_counts(dist.check, m))
    excess = sum(check_degrees) - total_edges
    if abs(excess) > max(check_degrees):
        raise EnsembleError(
            f"Edge counts disagree by {excess} after rounding; distribution is infeasible",
        )
    if max(variable_degrees, default=0) > m or max(check_degrees) > n:
        raise EnsembleError("A node degree exceeds the size of the opposite side")
    variable_degrees, check_degrees = _balance(variable_degrees, check_degrees, excess)
    return SocketSampler(seed).sample(variable_degrees, check_degrees)


def sample_irregular(n: int, dist: DegreeDistribution, seed: int) -> SparseBinaryMatrix:
    """Sample a matrix whose degree profile follows ``dist`` up to rounding."""
    try:
        return sample_irregular_code(n, dist, seed).matrix
    except DegreeDistributionError as exc:
        raise EnsembleError(str(exc)) from exc


def _expand(counts: dict[int, int]) -> list[int]:
    return [degree for degree in sorted(counts) for _ in range(counts[degree])]


def _balance(
    variable_degrees: list[int],
    check_degrees: list[int],
    excess: int,
) -> tuple[list[int], list[int]]:
    """Trim the longer socket list so both sides carry the same edge count."""
    if excess > 0:
        check_degrees = _trim(check_degrees, excess)
    elif excess < 0:
        variable_degrees = _trim(variable_degrees, -excess)
    return variable_degrees, check_degrees


def _trim(degrees: list[int], amount: int) -> list[int]:
    if sum(degree - 1 for degree in degrees) < amount:
        raise EnsembleError("Cannot trim sockets without dropping a node to degree 0")
    trimmed = list(degrees)
    index = len(trimmed) - 1
    while amount:
        if trimmed[index] > 1:
            trimmed[index] -= 1
            amount -= 1
        index = (index - 1) % len(trimmed)
    return trimmed
