"""Information-theoretic quantifiers of a pattern distribution.

Four numbers summarize a probability vector P over M symbols:

    S[P]  = -sum_i p_i ln p_i          Shannon entropy in nats, 0 ln 0 = 0
    H[P]  = S[P] / ln M                normalized entropy in [0, 1]
    Q_J   = Q0 * ( S[(P+U)/2] - S[P]/2 - S[U]/2 )
    C     = Q_J * H                    statistical complexity

where U is the uniform distribution and Q_J is the Jensen-Shannon
disequilibrium, normalized by the constant

    Q0 = -2 / ( ((M+1)/M) ln(M+1) - 2 ln(2M) + ln M )

so that a point mass scores Q_J = 1 against U.  C vanishes both for fully
deterministic and for fully random dynamics and is positive in between,
and it is not a function of H alone: distributions with equal entropy can
carry different complexity.

References: Lamberti, Martin, Plastino & Rosso (2004), Physica A 334, 119;
Lopez-Ruiz, Mancini & Calbet (1995), Phys. Lett. A 209, 321.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConfigError, DataError, InvariantError


@dataclass(frozen=True)
class Quantifiers:
    """The (S, H, Q_J, C) bundle for one distribution over M symbols."""

    shannon: float
    normalized_entropy: float
    disequilibrium: float
    complexity: float
    alphabet_size: int


def _probabilities(dist) -> np.ndarray:
    """Probability vector of a PatternDistribution or plain array-like."""
    p = np.asarray(getattr(dist, "probabilities", dist), dtype=np.float64)
    if p.ndim != 1 or p.size < 1:
        raise DataError("expected a one-dimensional probability vector")
    if float(p.min(initial=0.0)) < -1e-12:
        raise DataError("probabilities must be nonnegative")
    if abs(float(p.sum()) - 1.0) > 1e-9:
        raise DataError(f"probabilities sum to {float(p.sum())!r}, not 1")
    return p


def _unit_interval(x: float, what: str) -> float:
    # quantities mathematically confined to [0, 1]; excursions beyond
    # rounding noise indicate a real defect upstream
    if x < -1e-9 or x > 1.0 + 1e-9:
        raise InvariantError(f"{what} = {x!r} escapes [0, 1]")
    return min(max(x, 0.0), 1.0) + 0.0


def shannon_entropy(dist) -> float:
    """Shannon entropy -sum p ln p in nats, with the 0 ln 0 = 0 convention.

    Zero bins are skipped by an explicit branch rather than epsilon
    flooring, so degenerate distributions score exactly 0.0.
    """
    p = _probabilities(dist)
    nz = p[p > 0.0]
    return float(-(nz * np.log(nz)).sum()) + 0.0  # + 0.0 drops any signed zero


def uniform_distribution(alphabet_size: int) -> np.ndarray:
    """The maximum-entropy reference distribution over the alphabet."""
    if alphabet_size < 1:
        raise ConfigError(f"alphabet size must be >= 1, got {alphabet_size}")
    return np.full(alphabet_size, 1.0 / alphabet_size)


def normalized_entropy(dist) -> float:
    """Entropy scaled by its maximum ln M; 1 for uniform, 0 for a point mass."""
    p = _probabilities(dist)
    if p.size < 2:
        raise ConfigError("normalized entropy is undefined for fewer than 2 symbols")
    return _unit_interval(shannon_entropy(p) / math.log(p.size), "normalized entropy")


def normalization_constant(alphabet_size: int) -> float:
    """Q0, fixing the disequilibrium of (point mass, uniform) at exactly 1."""
    m = alphabet_size
    if m < 2:
        raise ConfigError(f"alphabet size must be >= 2, got {m}")
    return -2.0 / (
        ((m + 1) / m) * math.log(m + 1) - 2.0 * math.log(2 * m) + math.log(m)
    )


def disequilibrium(dist, reference=None) -> float:
    """Normalized Jensen-Shannon divergence between a distribution and a reference.

    The reference defaults to the uniform distribution on the same
    alphabet, which is the standard choice for the causality plane.
    Symmetric in its arguments, zero iff they coincide, and exactly 1 for
    a point mass against uniform.
    """
    p = _probabilities(dist)
    ref = uniform_distribution(p.size) if reference is None else _probabilities(reference)
    if ref.size != p.size:
        raise ConfigError(
            f"alphabet sizes differ: {p.size} vs {ref.size}"
        )
    if p.size < 2:
        raise ConfigError("disequilibrium is undefined for fewer than 2 symbols")
    divergence = (
        shannon_entropy((p + ref) / 2.0)
        - shannon_entropy(p) / 2.0
        - shannon_entropy(ref) / 2.0
    )
    return _unit_interval(
        normalization_constant(p.size) * divergence, "disequilibrium"
    )


def statistical_complexity(dist) -> Quantifiers:
    """Full quantifier bundle; complexity is the product Q_J * H."""
    p = _probabilities(dist)
    if p.size < 2:
        raise ConfigError("complexity is undefined for fewer than 2 symbols")
    s = shannon_entropy(p)
    h = _unit_interval(s / math.log(p.size), "normalized entropy")
    q = disequilibrium(p)
    return Quantifiers(
        shannon=s,
        normalized_entropy=h,
        disequilibrium=q,
        complexity=q * h,
        alphabet_size=int(p.size),
    )
