from __future__ import annotations

import math
from collections import defaultdict
from collections.abc import Iterable, Mapping
from statistics import NormalDist

from dualpeel.sim.models import Algorithm, Outcome, SuccessEstimate, SweepPoint, TrialRecord


def estimate(successes: int, trials: int, confidence: float) -> SuccessEstimate:
    """Success frequency with a normal-approximation confidence half-width."""
    if trials <= 0:
        return SuccessEstimate(successes=0, trials=0, probability=0.0, ci_halfwidth=0.0)
    probability = successes / trials
    z_value = NormalDist().inv_cdf(0.5 + confidence / 2)
    halfwidth = z_value * math.sqrt(probability * (1 - probability) / trials)
    return SuccessEstimate(
        successes=successes,
        trials=trials,
        probability=probability,
        ci_halfwidth=halfwidth,
    )


def estimate_rows(rows: Iterable[TrialRecord], confidence: float) -> SuccessEstimate:
    rows = tuple(rows)
    successes = sum(1 for row in rows if row.outcome is Outcome.success)
    return estimate(successes, len(rows), confidence)


def sorted_rows(rows: Iterable[TrialRecord]) -> tuple[TrialRecord, ...]:
    """Canonical row order, independent of execution order."""
    return tuple(
        sorted(rows, key=lambda row: (row.erasure_prob, row.trial, row.algorithm.value, row.n)),
    )


def success_points(
    rows: Iterable[TrialRecord],
    confidence: float,
    bounds: Mapping[tuple[Algorithm, float], float] | None = None,
) -> tuple[SweepPoint, ...]:
    """One point per ``(rate, e, algorithm)`` group of rows."""
    groups: defaultdict[tuple[float, float, Algorithm], list[TrialRecord]] = defaultdict(list)
    for row in rows:
        groups[row.rate, row.erasure_prob, row.algorithm].append(row)
    bounds = bounds or {}
    return tuple(
        SweepPoint(
            rate=rate,
            erasure_prob=erasure_prob,
            algorithm=algorithm,
            estimate=estimate_rows(group, confidence),
            bound=bounds.get((algorithm, erasure_prob)),
        )
        for (rate, erasure_prob, algorithm), group in sorted(
            groups.items(),
            key=lambda item: (item[0][1], item[0][2].value, item[0][0]),
        )
    )


def rows_for(rows: Iterable[TrialRecord], algorithm: Algorithm) -> tuple[TrialRecord, ...]:
    return tuple(row for row in rows if row.algorithm is algorithm)
