from __future__ import annotations


class DimensionMismatchError(ValueError):
    """Raised when vector and matrix shapes do not agree."""


class BitIndexError(IndexError):
    """Raised when a bit position is outside a vector or matrix."""
