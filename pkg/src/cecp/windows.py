"""Sliding-window evaluation of ordinal quantifiers over a series.

A fixed-length window advances by a fixed step over the observation rows
(business days as given in the file, never calendar days), and each
window is reduced to its (S, H, Q_J, C) bundle.  Window k covers rows
1 + (k-1)*step through (k-1)*step + window_length, 1-based; trailing rows
that do not fill a final window are dropped.  The resulting dated
trajectory is how the quantifiers are tracked through time.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

import numpy as np

from .errors import ConfigError, DataError
from .ordinal import OrdinalConfig, TimeSeries, pattern_distribution
from .quantifiers import Quantifiers, statistical_complexity


@dataclass(frozen=True)
class WindowSpec:
    """Window length and step, plus the ordinal configuration used inside."""

    window_length: int = 300
    step: int = 20
    ordinal: OrdinalConfig = field(default_factory=OrdinalConfig)

    def __post_init__(self) -> None:
        if not isinstance(self.step, int) or self.step < 1:
            raise ConfigError(f"step must be an integer >= 1, got {self.step!r}")
        alphabet = self.ordinal.alphabet_size
        floor = self.ordinal.span - 1 + alphabet  # at least D! pattern vectors
        if not isinstance(self.window_length, int) or self.window_length < floor:
            raise ConfigError(
                f"window_length must be an integer >= {floor} so each window "
                f"yields at least {alphabet} pattern vectors, got {self.window_length!r}"
            )
        if self.window_length < 5 * alphabet:
            warnings.warn(
                f"window_length {self.window_length} below 5 * {alphabet}: "
                "per-window histograms will be unreliable",
                stacklevel=2,
            )

    def count_windows(self, series_length: int) -> int:
        if series_length < self.window_length:
            raise DataError(
                f"series of length {series_length} is shorter than one "
                f"window of {self.window_length}"
            )
        return (series_length - self.window_length) // self.step + 1


@dataclass(frozen=True)
class WindowResult:
    """Quantifiers of one window, with 1-based index and row or date labels."""

    index: int
    begin_label: str
    end_label: str
    quantifiers: Quantifiers


@dataclass(frozen=True)
class Trajectory:
    """Ordered window results for one series."""

    series_name: str
    spec: WindowSpec
    results: tuple[WindowResult, ...]

    def __len__(self) -> int:
        return len(self.results)

    def __iter__(self):
        return iter(self.results)

    def __getitem__(self, i):
        return self.results[i]

    @property
    def entropies(self) -> np.ndarray:
        return np.array([r.quantifiers.normalized_entropy for r in self.results])

    @property
    def complexities(self) -> np.ndarray:
        return np.array([r.quantifiers.complexity for r in self.results])


def slide(series: TimeSeries, spec: WindowSpec, max_windows: int | None = None) -> Trajectory:
    """Quantify every window of the series, ordered by window index.

    Emits floor((N - window_length) / step) + 1 windows.  ``max_windows``
    truncates the trajectory after that many windows, which reproduces
    published bookkeeping that stopped one window short of the formula.
    Begin and end labels are copied from the series' date labels when
    present and are 1-based row numbers otherwise.
    """
    if max_windows is not None and max_windows < 1:
        raise ConfigError(f"max_windows must be >= 1, got {max_windows}")
    count = spec.count_windows(len(series))
    if max_windows is not None:
        count = min(count, max_windows)
    results = []
    for k in range(count):
        start = k * spec.step
        stop = start + spec.window_length
        dist = pattern_distribution(series.values[start:stop], spec.ordinal)
        if series.labels is not None:
            begin, end = series.labels[start], series.labels[stop - 1]
        else:
            begin, end = str(start + 1), str(stop)
        results.append(
            WindowResult(
                index=k + 1,
                begin_label=begin,
                end_label=end,
                quantifiers=statistical_complexity(dist),
            )
        )
    return Trajectory(series_name=series.name, spec=spec, results=tuple(results))


def subsample_trajectory(trajectory: Trajectory, ratio: int) -> Trajectory:
    """Keep windows whose index is 1 modulo the ratio; indices are preserved.

    Used to thin a trajectory for the movement-scheme export (a 1:4
    proportion keeps indices 1, 5, 9, ...).
    """
    if ratio < 1:
        raise ConfigError(f"ratio must be >= 1, got {ratio}")
    kept = tuple(r for r in trajectory.results if (r.index - 1) % ratio == 0)
    return Trajectory(
        series_name=trajectory.series_name, spec=trajectory.spec, results=kept
    )
