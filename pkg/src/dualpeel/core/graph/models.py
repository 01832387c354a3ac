from __future__ import annotations

import math
from collections import Counter
from collections.abc import Mapping
from dataclasses import dataclass
from enum import StrEnum
from types import MappingProxyType

from dualpeel.core.gf2 import SparseBinaryMatrix

DISTRIBUTION_TOLERANCE = 1e-9


class NodeKind(StrEnum):
    repetition = "="
    parity = "+"


class GraphRole(StrEnum):
    syndrome_former = "syndrome-former"
    encoder = "encoder"


class DegreeDistributionError(ValueError):
    """Raised when a degree distribution is malformed or cannot be realised."""


@dataclass(frozen=True, slots=True)
class CodeGraph:
    """Normal graph of a code.

    Symbol nodes carry the external word (one per matrix column); constraint
    nodes are the matrix rows. Edges are ``(symbol, constraint)`` pairs. Both
    node kinds are stored so dualisation only swaps labels.
    """

    n_symbols: int
    n_constraints: int
    edges: frozenset[tuple[int, int]]
    role: GraphRole = GraphRole.syndrome_former
    symbol_kind: NodeKind = NodeKind.repetition
    constraint_kind: NodeKind = NodeKind.parity

    def __post_init__(self) -> None:
        for symbol, constraint in self.edges:
            if not (0 <= symbol < self.n_symbols and 0 <= constraint < self.n_constraints):
                raise ValueError(f"Edge ({symbol}, {constraint}) is outside the graph")

    @property
    def n_vars(self) -> int:
        """Count of ``=`` nodes."""
        if self.symbol_kind is NodeKind.repetition:
            return self.n_symbols
        return self.n_constraints

    @property
    def n_checks(self) -> int:
        """Count of ``+`` nodes."""
        if self.symbol_kind is NodeKind.parity:
            return self.n_symbols
        return self.n_constraints

    def symbol_degrees(self) -> list[int]:
        degrees = [0] * self.n_symbols
        for symbol, _ in self.edges:
            degrees[symbol] += 1
        return degrees

    def constraint_degrees(self) -> list[int]:
        degrees = [0] * self.n_constraints
        for _, constraint in self.edges:
            degrees[constraint] += 1
        return degrees

    def check_degrees(self) -> list[int]:
        """Degrees of the ``+`` nodes, whichever side they sit on."""
        if self.constraint_kind is NodeKind.parity:
            return self.constraint_degrees()
        return self.symbol_degrees()

    def biadjacency(self) -> SparseBinaryMatrix:
        """Constraint-by-symbol incidence matrix (``H`` or ``G⊥``)."""
        return SparseBinaryMatrix(
            self.n_constraints,
            self.n_symbols,
            frozenset((constraint, symbol) for symbol, constraint in self.edges),
        )


def from_parity_check(parity_check: SparseBinaryMatrix) -> CodeGraph:
    """Syndrome-former graph: one ``=`` node per column, one ``+`` node per row."""
    if parity_check.rows == 0 and parity_check.cols == 0:
        raise ValueError("Parity-check matrix must not be empty")
    return CodeGraph(
        n_symbols=parity_check.cols,
        n_constraints=parity_check.rows,
        edges=frozenset((col, row) for row, col in parity_check.entries),
    )


def dual_graph(graph: CodeGraph) -> CodeGraph:
    """Swap ``+`` and ``=`` nodes; a syndrome former becomes an encoder and back."""
    flipped_role = (
        GraphRole.encoder if graph.role is GraphRole.syndrome_former else GraphRole.syndrome_former
    )
    return CodeGraph(
        n_symbols=graph.n_symbols,
        n_constraints=graph.n_constraints,
        edges=graph.edges,
        role=flipped_role,
        symbol_kind=graph.constraint_kind,
        constraint_kind=graph.symbol_kind,
    )


def max_degree(graph: CodeGraph) -> int:
    return max([*graph.symbol_degrees(), *graph.constraint_degrees(), 0])


def check_degree_profile(graph: CodeGraph) -> list[tuple[int, int]]:
    """Sorted ``(degree, count)`` pairs over the ``+`` nodes."""
    return sorted(Counter(graph.check_degrees()).items())


@dataclass(frozen=True, slots=True)
class DegreeDistribution:
    """Node-perspective degree fractions for both sides of a bipartite ensemble."""

    variable: Mapping[int, float]
    check: Mapping[int, float]

    def __post_init__(self) -> None:
        object.__setattr__(self, "variable", MappingProxyType(dict(self.variable)))
        object.__setattr__(self, "check", MappingProxyType(dict(self.check)))
        _validate_side("variable", self.variable)
        _validate_side("check", self.check)

    @classmethod
    def regular(cls, dv: int, dc: int) -> DegreeDistribution:
        return cls(variable={dv: 1.0}, check={dc: 1.0})

    @classmethod
    def parse(cls, spec: str) -> DegreeDistribution:
        """Parse ``"2:0.5,3:0.5/6:1"``: variable side, a slash, then check side."""
        try:
            variable_text, check_text = spec.split("/")
        except ValueError as exc:
            raise DegreeDistributionError(
                f"Degree spec {spec!r} must look like '2:0.5,3:0.5/6:1'",
            ) from exc
        return cls(variable=_parse_side(variable_text), check=_parse_side(check_text))

    @property
    def mean_variable_degree(self) -> float:
        return math.fsum(degree * fraction for degree, fraction in self.variable.items())

    @property
    def mean_check_degree(self) -> float:
        return math.fsum(degree * fraction for degree, fraction in self.check.items())


def node_counts(fractions: Mapping[int, float], total: int) -> dict[int, int]:
    """Round ``total * fraction`` per degree so the counts sum to ``total``.

    Largest-remainder rounding, ties broken by ascending degree.
    """
    raw = {degree: total * fraction for degree, fraction in fractions.items()}
    counts = {degree: math.floor(value) for degree, value in raw.items()}
    missing = total - sum(counts.values())
    by_remainder = sorted(raw, key=lambda degree: (counts[degree] - raw[degree], degree))
    for degree in by_remainder[:missing]:
        counts[degree] += 1
    return counts


def _validate_side(side: str, fractions: Mapping[int, float]) -> None:
    if not fractions:
        raise DegreeDistributionError(f"{side} degree distribution is empty")
    for degree, fraction in fractions.items():
        if degree < 1:
            raise DegreeDistributionError(f"{side} degree {degree} must be at least 1")
        if fraction < 0:
            raise DegreeDistributionError(f"{side} fraction for degree {degree} is negative")
    total = math.fsum(fractions.values())
    if abs(total - 1.0) > DISTRIBUTION_TOLERANCE:
        raise DegreeDistributionError(f"{side} fractions sum to {total}, expected 1")


def _parse_side(text: str) -> dict[int, float]:
    fractions: dict[int, float] = {}
    for item in text.split(","):
        try:
            degree_text, fraction_text = item.split(":")
            fractions[int(degree_text)] = float(fraction_text)
        except ValueError as exc:
            raise DegreeDistributionError(f"Cannot parse degree entry {item!r}") from exc
    return fractions
