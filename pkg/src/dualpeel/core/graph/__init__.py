from __future__ import annotations

from dualpeel.core.graph.alist import AlistCodec, AlistFormatError
from dualpeel.core.graph.ensembles import (
    EnsembleError,
    SampledCode,
    SocketSampler,
    sample_irregular,
    sample_irregular_code,
    sample_regular_code,
    sample_regular_ldpc,
)
from dualpeel.core.graph.models import (
    CodeGraph,
    DegreeDistribution,
    DegreeDistributionError,
    GraphRole,
    NodeKind,
    check_degree_profile,
    dual_graph,
    from_parity_check,
    max_degree,
    node_counts,
)

__all__ = (
    "AlistCodec",
    "AlistFormatError",
    "CodeGraph",
    "DegreeDistribution",
    "DegreeDistributionError",
    "EnsembleError",
    "GraphRole",
    "NodeKind",
    "SampledCode",
    "SocketSampler",
    "check_degree_profile",
    "dual_graph",
    "from_parity_check",
    "max_degree",
    "node_counts",
    "sample_irregular",
    "sample_irregular_code",
    "sample_regular_code",
    "sample_regular_ldpc",
)
