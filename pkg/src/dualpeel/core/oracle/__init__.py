from __future__ import annotations

from dualpeel.core.oracle.bounds import (
    BoundEstimate,
    bound_from_profile,
    failure_bound,
    failure_bound_product,
    failure_bound_weak_product,
)
from dualpeel.core.oracle.optimal import (
    EXHAUSTIVE_MAX_ROWS,
    MLAnomaly,
    MLDecoding,
    MLOutcome,
    OracleLimitError,
    OracleWitness,
    decodable,
    exhaustive_quantize,
    ml_decode,
    optimal_quantize,
    pattern_quantizable_with_parity_check,
    quantizable,
    quantize_with_parity_check,
    restrict,
)
from dualpeel.core.oracle.stacked import StackedSystem, build_stacked, build_stacked_dual

__all__ = (
    "EXHAUSTIVE_MAX_ROWS",
    "BoundEstimate",
    "MLAnomaly",
    "MLDecoding",
    "MLOutcome",
    "OracleLimitError",
    "OracleWitness",
    "StackedSystem",
    "bound_from_profile",
    "build_stacked",
    "build_stacked_dual",
    "decodable",
    "exhaustive_quantize",
    "failure_bound",
    "failure_bound_product",
    "failure_bound_weak_product",
    "ml_decode",
    "optimal_quantize",
    "pattern_quantizable_with_parity_check",
    "quantizable",
    "quantize_with_parity_check",
    "restrict",
)
