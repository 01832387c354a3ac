from __future__ import annotations

from dualpeel.core.iterative.decoder import erasure_decode
from dualpeel.core.iterative.measures import (
    complement_pattern,
    distortion,
    erasure_fraction,
    exact_distortion,
    matches_unerased,
)
from dualpeel.core.iterative.models import (
    DecodeFailure,
    DecodeOutcome,
    DecodeSuccess,
    ErasurePattern,
    ErasureWord,
    QuantFailure,
    QuantOutcome,
    QuantSuccess,
    ReservationStack,
    TieBreak,
    pattern_of,
)
from dualpeel.core.iterative.quantizer import erasure_quantize
from dualpeel.core.iterative.worklist import IndexWorklist

__all__ = (
    "DecodeFailure",
    "DecodeOutcome",
    "DecodeSuccess",
    "ErasurePattern",
    "ErasureWord",
    "IndexWorklist",
    "QuantFailure",
    "QuantOutcome",
    "QuantSuccess",
    "ReservationStack",
    "TieBreak",
    "complement_pattern",
    "distortion",
    "erasure_decode",
    "erasure_fraction",
    "erasure_quantize",
    "exact_distortion",
    "matches_unerased",
    "pattern_of",
)
