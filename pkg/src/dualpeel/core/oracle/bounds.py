"""Lower bounds on the failure probability of LDPC-defined quantizers.

Every check of degree ``d`` whose positions are all unerased can be violated
with probability ``1/2``; independence across such checks gives the product
form, and the usual relaxations give the weaker closed forms.
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass

from dualpeel.core.messages import MessageDomainError


@dataclass(frozen=True, slots=True)
class BoundEstimate:
    """All three bound forms for one ``(c, d)`` choice."""

    degree: int
    fraction: float
    product: float
    weak_product: float
    exponential: float


def failure_bound(fraction: float, n: int, erasure_prob: float, degree: int) -> float:
    """``1 - exp(-c n (1/2 - e/2)^d)``."""
    _validate(fraction, n, erasure_prob, degree)
    return _exponential(fraction * n, erasure_prob, degree)


def failure_bound_product(fraction: float, n: int, erasure_prob: float, degree: int) -> float:
    """``1 - [1 - (1/2)(1 - e)^d]^(c n)``, the tightest form."""
    _validate(fraction, n, erasure_prob, degree)
    return _product(fraction * n, 0.5 * (1 - erasure_prob) ** degree)


def failure_bound_weak_product(fraction: float, n: int, erasure_prob: float, degree: int) -> float:
    """``1 - [1 - (1/2 - e/2)^d]^(c n)``."""
    _validate(fraction, n, erasure_prob, degree)
    return _product(fraction * n, (0.5 - erasure_prob / 2) ** degree)


def bound_from_profile(
    profile: Sequence[tuple[int, int]],
    n: int,
    erasure_prob: float,
) -> BoundEstimate | None:
    """Best estimate over the check degrees present in ``profile``.

    For each degree ``d`` the count of checks with degree at most ``d`` plays
    the role of ``c n``. The degree maximizing the product form is reported.
    Returns ``None`` for codes without checks.
    """
    if n <= 0:
        raise MessageDomainError(f"Block length must be positive, got {n}")
    if not 0 <= erasure_prob <= 1:
        raise MessageDomainError(f"Erasure probability must lie in [0, 1], got {erasure_prob}")

    best: BoundEstimate | None = None
    covered = 0
    for degree, count in sorted(profile):
        covered += count
        if degree < 1:
            continue
        estimate = BoundEstimate(
            degree=degree,
            fraction=covered / n,
            product=_product(covered, 0.5 * (1 - erasure_prob) ** degree),
            weak_product=_product(covered, (0.5 - erasure_prob / 2) ** degree),
            exponential=_exponential(covered, erasure_prob, degree),
        )
        if best is None or estimate.product > best.product:
            best = estimate
    return best


def _product(checks: float, violation: float) -> float:
    if violation <= 0:
        return 0.0
    return -math.expm1(checks * math.log1p(-violation))


def _exponential(checks: float, erasure_prob: float, degree: int) -> float:
    return -math.expm1(-checks * (0.5 - erasure_prob / 2) ** degree)


def _validate(fraction: float, n: int, erasure_prob: float, degree: int) -> None:
    if not 0 < fraction <= 1:
        raise MessageDomainError(f"Check fraction must lie in (0, 1], got {fraction}")
    if n < 0:
        raise MessageDomainError(f"Block length must be non-negative, got {n}")
    if not 0 <= erasure_prob <= 1:
        raise MessageDomainError(f"Erasure probability must lie in [0, 1], got {erasure_prob}")
    if degree < 1:
        raise MessageDomainError(f"Check degree must be at least 1, got {degree}")
