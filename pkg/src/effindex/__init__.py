"""Capital-market efficiency measurement toolkit.

Estimates long-term memory (local Whittle and log-periodogram regression),
fractal dimension (Hall-Wood and Genton) and surrogate-normalized
approximate entropy of price series, and combines the three into a single
efficiency index with ranking and reporting machinery.
"""

__version__ = "0.1.0"

from .efficiency import (
    EfficiencyConfig,
    EfficiencyRecord,
    analyze_series,
    combine_estimates,
    component_rankings,
    component_rankings_csv,
    efficiency_index,
    rank_records,
    spearman,
)
from .entropy import EntropyEstimate, apen, correlation_sum, normalized_apen
from .exceptions import (
    DegeneratePathError,
    DegenerateSeriesError,
    DegenerateSpectrumError,
    EffindexError,
    InsufficientBandError,
    InsufficientDataError,
    OrderingError,
    ParseError,
)
from .fractal import FractalEstimate, abs_scale, genton, hall_wood, variogram2
from .ingest import (
    LogPriceSeries,
    PriceSeries,
    ReturnSeries,
    StatsSummary,
    describe,
    kpss_level,
    parse_price_csv,
    to_log_prices,
    to_log_returns,
)
from .spectral import HurstEstimate, Periodogram, bandwidth, gph, local_whittle, periodogram
from .synth import GeneratorSpec, ar1, fbm_path, fgn, fgn_autocov, generate, shuffle, white_noise

__all__ = [
    "DegeneratePathError",
    "DegenerateSeriesError",
    "DegenerateSpectrumError",
    "EffindexError",
    "EfficiencyConfig",
    "EfficiencyRecord",
    "EntropyEstimate",
    "FractalEstimate",
    "GeneratorSpec",
    "HurstEstimate",
    "InsufficientBandError",
    "InsufficientDataError",
    "LogPriceSeries",
    "OrderingError",
    "ParseError",
    "Periodogram",
    "PriceSeries",
    "ReturnSeries",
    "StatsSummary",
    "abs_scale",
    "analyze_series",
    "apen",
    "ar1",
    "bandwidth",
    "combine_estimates",
    "component_rankings",
    "component_rankings_csv",
    "correlation_sum",
    "describe",
    "efficiency_index",
    "fbm_path",
    "fgn",
    "fgn_autocov",
    "generate",
    "genton",
    "gph",
    "hall_wood",
    "kpss_level",
    "local_whittle",
    "normalized_apen",
    "parse_price_csv",
    "periodogram",
    "rank_records",
    "shuffle",
    "spearman",
    "to_log_prices",
    "to_log_returns",
    "variogram2",
    "white_noise",
]
