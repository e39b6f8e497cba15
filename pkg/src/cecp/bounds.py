"""Envelopes of the complexity-entropy causality plane.

For a fixed alphabet size M every probability distribution lands between
two curves in the (H, C) plane.  Both extremes are traced by
one-parameter families of distributions (Martin, Plastino & Rosso 2006,
Physica A 369, 439):

* minimum complexity: one component carries p in [1/M, 1] and the other
  M-1 share the rest equally, running from the uniform corner (1, 0) down
  to the point mass at (0, 0);
* maximum complexity: for each count n = 0..M-2 of components pinned at
  zero, one component carries p in [0, 1/(M-n)] and the remaining M-n-1
  share the rest equally.  The upper envelope is the pointwise maximum of
  C over all the families, taken within uniform H bins.

Curve points are evaluated with the exact same quantifier code used for
measured data, so envelopes and measurements are mutually consistent by
construction; the Monte Carlo dominance tests in the suite guard the
construction itself.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConfigError, InvariantError
from .quantifiers import statistical_complexity

#: Samples per parametric family and H bins for the upper envelope.  At
#: this resolution the linear-interpolation error sits well below the
#: 1e-6 slack used by the containment checks.
DEFAULT_GRID = 2000


@dataclass(frozen=True)
class BoundsCurve:
    """Lower and upper complexity envelopes sampled on a common H grid."""

    alphabet_size: int
    h: np.ndarray
    c_min: np.ndarray
    c_max: np.ndarray

    def __post_init__(self) -> None:
        h = np.asarray(self.h, dtype=np.float64)
        c_min = np.asarray(self.c_min, dtype=np.float64)
        c_max = np.asarray(self.c_max, dtype=np.float64)
        if not (h.shape == c_min.shape == c_max.shape) or h.ndim != 1 or h.size < 2:
            raise InvariantError("bounds curve arrays are inconsistent")
        if np.any(np.diff(h) <= 0):
            raise InvariantError("bounds curve H samples must strictly increase")
        if np.any(c_min > c_max + 1e-9):
            raise InvariantError("lower envelope exceeds upper envelope")
        for c in (c_min, c_max):
            if abs(c[0]) > 1e-9 or abs(c[-1]) > 1e-9:
                raise InvariantError("envelopes must vanish at H = 0 and H = 1")
        object.__setattr__(self, "h", h)
        object.__setattr__(self, "c_min", c_min)
        object.__setattr__(self, "c_max", c_max)


def _evaluate(distributions) -> np.ndarray:
    points = np.empty((len(distributions), 2))
    for i, p in enumerate(distributions):
        q = statistical_complexity(p)
        points[i] = (q.normalized_entropy, q.complexity)
    return points


def _check_curve_inputs(alphabet_size: int, grid_size: int) -> None:
    if alphabet_size < 2:
        raise ConfigError(f"alphabet size must be >= 2, got {alphabet_size}")
    if grid_size < 2:
        raise ConfigError(f"grid size must be >= 2, got {grid_size}")


def min_complexity_curve(alphabet_size: int, grid_size: int = DEFAULT_GRID) -> np.ndarray:
    """Sampled lower envelope as an (n, 2) array of (H, C), sorted by H.

    Generated from distributions with a single dominant component p in
    [1/M, 1] and all other components equal.
    """
    _check_curve_inputs(alphabet_size, grid_size)
    m = alphabet_size
    dists = []
    for p in np.linspace(1.0 / m, 1.0, grid_size):
        dist = np.full(m, (1.0 - p) / (m - 1))
        dist[0] = p
        dists.append(dist)
    points = _evaluate(dists)
    return points[np.argsort(points[:, 0])]


def max_complexity_curve(alphabet_size: int, grid_size: int = DEFAULT_GRID) -> np.ndarray:
    """Sampled upper envelope as an (n, 2) array of (H, C), sorted by H.

    All M-1 families are sampled, then reduced to the pointwise maximum of
    C within ``grid_size`` uniform H bins; each kept sample retains its
    exact (H, C) coordinates.  The exact endpoints (0, 0) and (1, 0) are
    always included.
    """
    _check_curve_inputs(alphabet_size, grid_size)
    m = alphabet_size
    dists = []
    for n_zero in range(m - 1):
        live = m - n_zero  # components allowed to be nonzero
        for p in np.linspace(0.0, 1.0 / live, grid_size):
            dist = np.zeros(m)
            dist[0] = p
            dist[1:live] = (1.0 - p) / (live - 1)
            dists.append(dist)
    points = _evaluate(dists)

    bins = np.clip((points[:, 0] * grid_size).astype(int), 0, grid_size - 1)
    keep = [(0.0, 0.0), (1.0, 0.0)]
    for b in np.unique(bins):
        members = points[bins == b]
        keep.append(tuple(members[np.argmax(members[:, 1])]))
    envelope = np.array(keep)
    order = np.lexsort((-envelope[:, 1], envelope[:, 0]))  # H ascending, C descending
    envelope = envelope[order]
    distinct = np.concatenate(([True], np.diff(envelope[:, 0]) > 0))
    return envelope[distinct]


def bounds_curve(alphabet_size: int, grid_size: int = DEFAULT_GRID) -> BoundsCurve:
    """Both envelopes resampled onto one uniform H grid of grid_size + 1 points."""
    lower = min_complexity_curve(alphabet_size, grid_size)
    upper = max_complexity_curve(alphabet_size, grid_size)
    h = np.linspace(0.0, 1.0, grid_size + 1)
    c_min = np.interp(h, lower[:, 0], lower[:, 1])
    c_max = np.interp(h, upper[:, 0], upper[:, 1])
    # the envelopes coincide at the corners; interpolation jitter there
    # must not flip their order
    c_min = np.minimum(c_min, c_max)
    return BoundsCurve(alphabet_size=alphabet_size, h=h, c_min=c_min, c_max=c_max)


def in_bounds(h: float, c: float, curve: BoundsCurve, tol: float = 1e-6) -> bool:
    """Whether a point sits between the envelopes, up to interpolation slack.

    The default tolerance covers the 1e-9 curve accuracy plus the error of
    linear interpolation at the default grid.
    """
    if not 0.0 <= h <= 1.0:
        raise ConfigError(f"H = {h!r} outside [0, 1]")
    c_lo = float(np.interp(h, curve.h, curve.c_min))
    c_hi = float(np.interp(h, curve.h, curve.c_max))
    return (c_lo - tol) <= c <= (c_hi + tol)
