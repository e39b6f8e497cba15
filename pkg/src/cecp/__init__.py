"""Ordinal-pattern quantifiers and the complexity-entropy causality plane.

The package turns a time series into Bandt-Pompe ordinal-pattern
distributions, computes permutation entropy and statistical complexity,
places sliding-window trajectories on the causality plane with its
theoretical envelopes, and runs shuffle-surrogate and mean-equality
checks, with a CLI that exports everything as CSV files and figures.
"""

from .bounds import (
    BoundsCurve,
    bounds_curve,
    in_bounds,
    max_complexity_curve,
    min_complexity_curve,
)
from .errors import ConfigError, DataError, InvariantError
from .ingest import ingest_csv
from .ordinal import (
    OrdinalConfig,
    OrdinalPattern,
    PatternDistribution,
    TimeSeries,
    decode_pattern,
    encode_pattern,
    extract_pattern,
    pattern_codes,
    pattern_distribution,
)
from .pipeline import (
    RunConfig,
    RunReport,
    SeriesInput,
    first_difference,
    load_config,
    run_pipeline,
)
from .quantifiers import (
    Quantifiers,
    disequilibrium,
    normalization_constant,
    normalized_entropy,
    shannon_entropy,
    statistical_complexity,
    uniform_distribution,
)
from .stats import (
    GENERATOR_NAME,
    MeanTestResult,
    SummaryStats,
    f_survival,
    mean_equality_test,
    shuffle_surrogate,
    summarize,
)
from .windows import Trajectory, WindowResult, WindowSpec, slide, subsample_trajectory

__version__ = "0.1.0"

__all__ = [
    "BoundsCurve",
    "ConfigError",
    "DataError",
    "GENERATOR_NAME",
    "InvariantError",
    "MeanTestResult",
    "OrdinalConfig",
    "OrdinalPattern",
    "PatternDistribution",
    "Quantifiers",
    "RunConfig",
    "RunReport",
    "SeriesInput",
    "SummaryStats",
    "TimeSeries",
    "Trajectory",
    "WindowResult",
    "WindowSpec",
    "bounds_curve",
    "decode_pattern",
    "disequilibrium",
    "encode_pattern",
    "extract_pattern",
    "f_survival",
    "first_difference",
    "in_bounds",
    "ingest_csv",
    "load_config",
    "max_complexity_curve",
    "mean_equality_test",
    "min_complexity_curve",
    "normalization_constant",
    "normalized_entropy",
    "pattern_codes",
    "pattern_distribution",
    "run_pipeline",
    "shannon_entropy",
    "shuffle_surrogate",
    "slide",
    "statistical_complexity",
    "subsample_trajectory",
    "summarize",
    "uniform_distribution",
    "__version__",
]
