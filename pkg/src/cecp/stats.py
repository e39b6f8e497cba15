"""Shuffle surrogates, descriptive statistics, and the mean-equality F-test.

Shuffling a series destroys every temporal correlation while preserving
the value distribution exactly, so the quantifiers of a shuffled series
should collapse toward the maximally random corner of the causality
plane; comparing original and surrogate trajectories is the standard
randomization check.

The descriptive summary and the classic one-way equal-variance ANOVA on
two groups back the cross-series comparison table.  Note the caveat for
window-level comparisons: overlapping windows are serially correlated, so
treating them as independent observations overstates the test's degrees
of freedom.  The table reproduces that convention rather than correcting
it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import betainc

from .errors import DataError
from .ordinal import TimeSeries

#: Bit generator behind every seeded operation; 128-bit state, published
#: reference streams.  Recorded in run metadata for reproducibility.
GENERATOR_NAME = "PCG64"


def shuffle_surrogate(series: TimeSeries, seed: int) -> TimeSeries:
    """Uniformly random permutation of the series values, labels dropped.

    Fisher-Yates driven by a seeded PCG64 generator: the same seed always
    produces the same surrogate, and the multiset of values is preserved
    exactly.
    """
    rng = np.random.Generator(np.random.PCG64(seed))
    return TimeSeries(
        values=rng.permutation(series.values),
        labels=None,
        name=f"{series.name}_surrogate",
    )


@dataclass(frozen=True)
class SummaryStats:
    """Five-number-style descriptive summary; std_dev uses the n-1 denominator."""

    mean: float
    median: float
    std_dev: float
    minimum: float
    maximum: float
    n: int


def summarize(values) -> SummaryStats:
    """Descriptive statistics of a sample; the even-n median averages the central pair.

    std_dev needs at least two observations and is NaN for a single one.
    """
    v = np.asarray(values, dtype=np.float64)
    if v.ndim != 1 or v.size < 1:
        raise DataError("summarize needs a non-empty one-dimensional sample")
    return SummaryStats(
        mean=float(np.mean(v)),
        median=float(np.median(v)),
        std_dev=float(np.std(v, ddof=1)) if v.size >= 2 else math.nan,
        minimum=float(np.min(v)),
        maximum=float(np.max(v)),
        n=int(v.size),
    )


@dataclass(frozen=True)
class MeanTestResult:
    """Two-group one-way ANOVA outcome.

    f_statistic is +inf with p 0 when the groups have no within-group
    variance but different means, and NaN (not applicable) when both
    variance and mean difference vanish.
    """

    f_statistic: float
    p_value: float
    df_between: int
    df_within: int

    @property
    def applicable(self) -> bool:
        return not math.isnan(self.f_statistic)


def f_survival(f_statistic: float, df_between: int, df_within: int) -> float:
    """Upper-tail probability of the F distribution.

    Computed through the regularized incomplete beta function:
    P(F > f) = I_x(d2/2, d1/2) with x = d2 / (d2 + d1 f).
    """
    if f_statistic < 0:
        raise DataError(f"F statistic must be >= 0, got {f_statistic}")
    if math.isinf(f_statistic):
        return 0.0
    x = df_within / (df_within + df_between * f_statistic)
    return float(betainc(df_within / 2.0, df_between / 2.0, x))


def mean_equality_test(group_a, group_b) -> MeanTestResult:
    """Classic equal-variance one-way ANOVA restricted to two groups.

    F = MS_between / MS_within with degrees of freedom (1, n_a + n_b - 2);
    on two groups this is exactly the square of the pooled-variance t
    statistic.  The between sum of squares is computed from the mean
    difference directly, so identical groups give F = 0 and p = 1 exactly.
    """
    a = np.asarray(group_a, dtype=np.float64)
    b = np.asarray(group_b, dtype=np.float64)
    if a.size < 2 or b.size < 2:
        raise DataError("each group needs at least 2 observations")
    na, nb = int(a.size), int(b.size)
    df_between, df_within = 1, na + nb - 2
    mean_a, mean_b = float(np.mean(a)), float(np.mean(b))
    delta = mean_a - mean_b
    ss_between = (na * nb / (na + nb)) * delta * delta
    ss_within = float(((a - mean_a) ** 2).sum() + ((b - mean_b) ** 2).sum())
    if ss_within == 0.0:
        if delta == 0.0:
            return MeanTestResult(math.nan, math.nan, df_between, df_within)
        return MeanTestResult(math.inf, 0.0, df_between, df_within)
    f = (ss_between / df_between) / (ss_within / df_within)
    return MeanTestResult(f, f_survival(f, df_between, df_within), df_between, df_within)
