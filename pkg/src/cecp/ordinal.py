"""Bandt-Pompe ordinal patterns and their empirical distribution.

A window of D observations spaced tau steps apart is reduced to the
permutation that lists, from the largest value down to the smallest, the
backward offset at which each value occurs (offset 0 is the newest
observation, offset D-1 the oldest).  Equal values are resolved in favour
of the larger offset taking the earlier slot, so symbolization is
deterministic and bit-reproducible without tie-breaking noise.

Counting every stride-1 window of a series over all D! permutations yields
the ordinal-pattern probability distribution, the common input to
permutation entropy and statistical complexity.  Because only the rank
order of values enters, the distribution is invariant under any strictly
increasing transform of a tie-free series.

Reference: Bandt & Pompe (2002), "Permutation entropy: a natural
complexity measure for time series", Phys. Rev. Lett. 88, 174102.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

from .errors import ConfigError, DataError, InvariantError

#: Largest supported embedding dimension; 9! = 362880 keeps the dense
#: histogram comfortably enumerable.
MAX_DIMENSION = 9


@dataclass(frozen=True)
class TimeSeries:
    """An ordered sequence of finite observations with optional date labels.

    Values are stored as a float64 array.  Labels, when present, are kept
    verbatim (typically date strings from a CSV) and must match the value
    count one to one.
    """

    values: np.ndarray
    labels: tuple[str, ...] | None = None
    name: str = "series"

    def __post_init__(self) -> None:
        values = np.asarray(self.values, dtype=np.float64)
        if values.ndim != 1:
            raise DataError(f"series '{self.name}': values must be one-dimensional")
        if values.size < 1:
            raise DataError(f"series '{self.name}': needs at least one observation")
        if not np.all(np.isfinite(values)):
            bad = int(np.flatnonzero(~np.isfinite(values))[0])
            raise DataError(
                f"series '{self.name}': non-finite value at position {bad + 1}"
            )
        object.__setattr__(self, "values", values)
        if self.labels is not None:
            labels = tuple(str(v) for v in self.labels)
            if len(labels) != values.size:
                raise DataError(
                    f"series '{self.name}': {len(labels)} labels for "
                    f"{values.size} values"
                )
            object.__setattr__(self, "labels", labels)

    def __len__(self) -> int:
        return int(self.values.size)


@dataclass(frozen=True)
class OrdinalConfig:
    """Embedding dimension (pattern length) and delay between compared samples."""

    dimension: int = 4
    delay: int = 1

    def __post_init__(self) -> None:
        if not isinstance(self.dimension, int) or not 2 <= self.dimension <= MAX_DIMENSION:
            raise ConfigError(
                f"dimension must be an integer in [2, {MAX_DIMENSION}], got {self.dimension!r}"
            )
        if not isinstance(self.delay, int) or self.delay < 1:
            raise ConfigError(f"delay must be an integer >= 1, got {self.delay!r}")

    @property
    def alphabet_size(self) -> int:
        """Number of distinct patterns, D!."""
        return math.factorial(self.dimension)

    @property
    def span(self) -> int:
        """Number of series rows one embedded window stretches across."""
        return (self.dimension - 1) * self.delay + 1


@dataclass(frozen=True)
class OrdinalPattern:
    """A rank permutation together with its lexicographic index."""

    ranks: tuple[int, ...]
    index: int


@dataclass(frozen=True)
class PatternDistribution:
    """Dense histogram of ordinal patterns, indexed lexicographically.

    ``probabilities[i] == counts[i] / total_vectors`` holds exactly by
    construction, and ``total_vectors`` equals the number of embedded
    windows, N - (D-1)*tau.
    """

    alphabet_size: int
    counts: np.ndarray
    probabilities: np.ndarray
    total_vectors: int

    def __post_init__(self) -> None:
        counts = np.asarray(self.counts, dtype=np.int64)
        probabilities = np.asarray(self.probabilities, dtype=np.float64)
        if counts.shape != (self.alphabet_size,) or probabilities.shape != (self.alphabet_size,):
            raise InvariantError("histogram arrays do not match the alphabet size")
        if int(counts.sum()) != self.total_vectors:
            raise InvariantError("pattern counts do not sum to the number of windows")
        if abs(float(probabilities.sum()) - 1.0) > 1e-12:
            raise InvariantError("pattern probabilities do not sum to 1")
        object.__setattr__(self, "counts", counts)
        object.__setattr__(self, "probabilities", probabilities)


def encode_pattern(ranks) -> int:
    """Lexicographic index of a permutation of (0, ..., D-1).

    Uses the Lehmer code: digit i counts later entries smaller than entry
    i, weighted by (D-1-i)!.  The identity permutation maps to 0 and the
    fully reversed one to D!-1.
    """
    ranks = tuple(int(r) for r in ranks)
    d = len(ranks)
    if sorted(ranks) != list(range(d)):
        raise ConfigError(f"not a permutation of 0..{d - 1}: {ranks}")
    index = 0
    for i in range(d - 1):
        smaller = sum(1 for j in range(i + 1, d) if ranks[j] < ranks[i])
        index += smaller * math.factorial(d - 1 - i)
    return index


def decode_pattern(index: int, dimension: int) -> tuple[int, ...]:
    """Permutation of (0, ..., dimension-1) with the given lexicographic index."""
    size = math.factorial(dimension)
    if not 0 <= index < size:
        raise ConfigError(
            f"index {index} out of range [0, {size}) for dimension {dimension}"
        )
    remaining = list(range(dimension))
    ranks = []
    rem = int(index)
    for i in range(dimension - 1, -1, -1):
        digit, rem = divmod(rem, math.factorial(i))
        ranks.append(remaining.pop(digit))
    return tuple(ranks)


def extract_pattern(window, config: OrdinalConfig) -> OrdinalPattern:
    """Symbolize one embedded window given oldest-to-newest.

    The returned permutation (r0, ..., r_{D-1}) lists backward offsets in
    decreasing value order: r0 is the offset of the largest value, r_{D-1}
    the offset of the smallest.  Equal values hand the earlier (larger
    value) slot to the larger offset.
    """
    w = np.asarray(window, dtype=np.float64)
    if w.ndim != 1 or w.size != config.dimension:
        raise ConfigError(
            f"window must hold exactly {config.dimension} values, got shape {w.shape}"
        )
    if not np.all(np.isfinite(w)):
        raise DataError("window contains a non-finite value")
    # Reversing puts entries in backward-offset order; a stable ascending
    # argsort then places equal values at the smaller offset first, which
    # is exactly the tie rule above once the order is flipped.
    ascending = np.argsort(w[::-1], kind="stable")
    ranks = tuple(int(r) for r in ascending[::-1])
    return OrdinalPattern(ranks=ranks, index=encode_pattern(ranks))


def _series_values(series, minimum: int, context: str) -> np.ndarray:
    """Accept a TimeSeries or any 1-D array-like and validate it."""
    if isinstance(series, TimeSeries):
        values = series.values
    else:
        values = np.asarray(series, dtype=np.float64)
        if values.ndim != 1:
            raise DataError(f"{context}: values must be one-dimensional")
        if not np.all(np.isfinite(values)):
            raise DataError(f"{context}: input contains non-finite values")
    if values.size < minimum:
        raise DataError(
            f"{context}: needs at least {minimum} values, got {values.size}"
        )
    return values


def pattern_codes(series, config: OrdinalConfig) -> np.ndarray:
    """Lexicographic pattern index of every stride-1 embedded window.

    Output has length N - (D-1)*tau; entry s is the code of the window
    ending at position s + (D-1)*tau of the input.
    """
    values = _series_values(series, config.span, "pattern extraction")
    d = config.dimension
    embedded = sliding_window_view(values, config.span)[:, :: config.delay]
    # Same construction as extract_pattern, applied row-wise.
    ascending = np.argsort(embedded[:, ::-1], axis=1, kind="stable")
    perms = ascending[:, ::-1]
    codes = np.zeros(len(perms), dtype=np.int64)
    for i in range(d - 1):
        smaller = (perms[:, i + 1 :] < perms[:, i : i + 1]).sum(axis=1)
        codes += smaller * math.factorial(d - 1 - i)
    return codes


def pattern_distribution(series, config: OrdinalConfig) -> PatternDistribution:
    """Empirical distribution of ordinal patterns over all stride-1 windows.

    A series of length N yields N - (D-1)*tau overlapping windows; the
    histogram is dense over all D! patterns so that absent patterns show
    up as explicit zero bins.

    Raises DataError when the series is shorter than one embedded window.
    """
    codes = pattern_codes(series, config)
    counts = np.bincount(codes, minlength=config.alphabet_size)
    total = int(codes.size)
    return PatternDistribution(
        alphabet_size=config.alphabet_size,
        counts=counts,
        probabilities=counts / total,
        total_vectors=total,
    )
