from __future__ import annotations

import logging
from dataclasses import dataclass, field

from dualpeel.core.gf2 import SparseBinaryMatrix, nullspace, rank
from dualpeel.core.graph import (
    AlistCodec,
    AlistFormatError,
    DegreeDistribution,
    DegreeDistributionError,
    EnsembleError,
    check_degree_profile,
    from_parity_check,
    sample_irregular_code,
    sample_regular_code,
)
from dualpeel.sim.models import CodeSpec, CodeSpecError

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class LoadedCode:
    """A parity-check matrix ready for experiments.

    ``rank`` is exact when ``rank_is_exact``; larger codes fall back to the
    number of checks, an upper bound. ``basis`` spans the code and is only
    computed alongside an exact rank.
    """

    parity_check: SparseBinaryMatrix
    label: str
    rank: int
    rank_is_exact: bool
    basis: SparseBinaryMatrix | None = None

    @property
    def n(self) -> int:
        return self.parity_check.cols

    @property
    def decode_rate(self) -> float:
        """Rate of the code ``{x : H xᵀ = 0}``."""
        return (self.n - self.rank) / self.n if self.n else 0.0

    @property
    def quantize_rate(self) -> float:
        """Rate of the dual code generated by the rows of ``H``."""
        return self.rank / self.n if self.n else 0.0

    def check_profile(self) -> list[tuple[int, int]]:
        return check_degree_profile(from_parity_check(self.parity_check))


@dataclass(frozen=True, kw_only=True, slots=True)
class CodeLoader:
    """Turn a ``CodeSpec`` into a parity-check matrix."""

    codec: AlistCodec = field(default_factory=AlistCodec)
    exact_rank_max_n: int = 4096

    def load(self, spec: CodeSpec) -> LoadedCode:
        """Read or sample the code.

        Raises:
            CodeSpecError: If the file or ensemble parameters are unusable.

        """
        matrix = self._matrix(spec)
        if matrix.cols <= self.exact_rank_max_n:
            code = LoadedCode(
                parity_check=matrix,
                label=spec.label,
                rank=rank(matrix),
                rank_is_exact=True,
                basis=nullspace(matrix),
            )
        else:
            logger.info(
                "Skipping elimination for n=%d; rates use the check count %d",
                matrix.cols,
                matrix.rows,
            )
            code = LoadedCode(
                parity_check=matrix,
                label=spec.label,
                rank=matrix.rows,
                rank_is_exact=False,
            )
        logger.info("Loaded %s: n=%d m=%d rank=%d", code.label, code.n, matrix.rows, code.rank)
        return code

    def _matrix(self, spec: CodeSpec) -> SparseBinaryMatrix:
        try:
            if spec.alist_path is not None:
                return self.codec.read(spec.alist_path)
            if spec.dist is not None:
                distribution = DegreeDistribution.parse(spec.dist)
                return sample_irregular_code(spec.n, distribution, spec.seed).matrix
            return sample_regular_code(spec.n, spec.dv, spec.dc, spec.seed).matrix
        except (AlistFormatError, DegreeDistributionError, EnsembleError) as exc:
            raise CodeSpecError(str(exc)) from exc
