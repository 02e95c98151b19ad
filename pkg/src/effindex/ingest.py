"""Price file parsing, log transforms and descriptive statistics.

Input files are UTF-8 CSV with a ``date,close`` header, ISO-8601 dates in
strictly increasing order and positive prices. Downstream estimators take
either log returns (spectral, entropy) or the log-price path (fractal).
"""

import datetime as dt
import math
from dataclasses import dataclass

import numpy as np

from .exceptions import (
    DegenerateSeriesError,
    InsufficientDataError,
    OrderingError,
    ParseError,
)

MIN_SERIES_LENGTH = 32
CSV_HEADER = "date,close"

# KPSS level-stationarity critical values (10 / 5 / 2.5 / 1 percent)
KPSS_CRITICAL = ((0.347, ">0.10"), (0.463, ">0.05"), (0.574, ">0.025"), (0.739, ">0.01"))
KPSS_REJECT_BRACKET = "≤0.01"


@dataclass
class PriceSeries:
    """Daily closing prices for one ticker, strictly increasing dates."""

    ticker: str
    dates: list
    closes: np.ndarray

    def __post_init__(self):
        self.closes = np.asarray(self.closes, dtype=np.float64)
        if len(self.dates) != self.closes.size:
            raise ValueError("dates and closes must have equal length")
        if self.closes.size < MIN_SERIES_LENGTH:
            raise InsufficientDataError(
                f"{self.ticker}: {self.closes.size} observations, "
                f"need at least {MIN_SERIES_LENGTH}"
            )
        if not np.all(np.isfinite(self.closes)) or np.any(self.closes <= 0.0):
            raise ParseError(f"{self.ticker}: prices must be finite and positive")
        for prev, cur in zip(self.dates, self.dates[1:]):
            if cur <= prev:
                raise OrderingError(
                    f"{self.ticker}: dates not strictly increasing at {cur}"
                )

    def __len__(self):
        return self.closes.size


@dataclass
class LogPriceSeries:
    """Natural log of closes; the sample-path input of the fractal estimators."""

    ticker: str
    values: np.ndarray


@dataclass
class ReturnSeries:
    """Log returns ln(P_t) - ln(P_{t-1}); one element shorter than the source."""

    ticker: str
    values: np.ndarray


@dataclass
class StatsSummary:
    mean: float
    min: float
    max: float
    sd: float
    skewness: float
    excess_kurtosis: float
    kpss_stat: float
    kpss_p_bracket: str

    def to_csv_row(self):
        """One CSV row: mean, min, max, SD, skewness, ex. kurtosis, KPSS, p-value."""
        return (
            f"{self.mean:.6f},{self.min:.6f},{self.max:.6f},{self.sd:.6f},"
            f"{self.skewness:.6f},{self.excess_kurtosis:.6f},"
            f"{self.kpss_stat:.6f},{self.kpss_p_bracket}"
        )


def parse_price_csv(text, ticker):
    """Parse ``date,close`` CSV content into a PriceSeries.

    Accepts a string or a file-like object. The header row (and any repeated
    exact header rows) are skipped; blank lines are ignored. Dates must be
    ISO-8601 and strictly increasing, prices positive. Raises ParseError /
    OrderingError / InsufficientDataError with the offending line number.
    """
    if hasattr(text, "read"):
        text = text.read()
    dates = []
    closes = []
    prev_date = None
    saw_header = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line == CSV_HEADER:
            saw_header = True
            continue
        parts = line.split(",")
        if len(parts) != 2:
            raise ParseError(f"{ticker}: line {lineno}: expected 'date,close', got {raw!r}")
        try:
            date = dt.date.fromisoformat(parts[0].strip())
        except ValueError as exc:
            raise ParseError(f"{ticker}: line {lineno}: bad ISO date {parts[0]!r}") from exc
        try:
            close = float(parts[1])
        except ValueError as exc:
            raise ParseError(f"{ticker}: line {lineno}: non-numeric price {parts[1]!r}") from exc
        if not math.isfinite(close) or close <= 0.0:
            raise ParseError(f"{ticker}: line {lineno}: non-positive price {parts[1]}")
        if prev_date is not None and date <= prev_date:
            raise OrderingError(
                f"{ticker}: line {lineno}: date {date} not after {prev_date}"
            )
        prev_date = date
        dates.append(date)
        closes.append(close)
    if not saw_header:
        raise ParseError(f"{ticker}: missing '{CSV_HEADER}' header row")
    if len(closes) < MIN_SERIES_LENGTH:
        raise InsufficientDataError(
            f"{ticker}: {len(closes)} data rows, need at least {MIN_SERIES_LENGTH}"
        )
    return PriceSeries(ticker=ticker, dates=dates, closes=np.array(closes))


def to_log_prices(p):
    """Elementwise natural log of the closes."""
    return LogPriceSeries(ticker=p.ticker, values=np.log(p.closes))


def to_log_returns(p):
    """First differences of the log prices."""
    logp = np.log(p.closes)
    return ReturnSeries(ticker=p.ticker, values=np.diff(logp))


def kpss_level(r, lag=None):
    """KPSS level-stationarity test statistic and p-value bracket.

    The statistic is sum_t S_t^2 / (T^2 * lrv) where S_t are partial sums of
    the demeaned series and lrv is the Bartlett-kernel long-run variance with
    the given truncation lag (default: floor(4 * (T/100)^(1/4))). The bracket
    comes from the 0.347 / 0.463 / 0.574 / 0.739 critical values.
    """
    x = np.asarray(r.values, dtype=np.float64)
    T = x.size
    if T < MIN_SERIES_LENGTH:
        raise InsufficientDataError(f"KPSS needs at least {MIN_SERIES_LENGTH} points, got {T}")
    if not np.all(np.isfinite(x)):
        raise ValueError("KPSS input must be finite")
    if lag is None:
        lag = int(math.floor(4.0 * (T / 100.0) ** 0.25))
    elif lag < 0:
        raise ValueError(f"lag must be nonnegative, got {lag}")
    e = x - x.mean()
    lrv = (e @ e) / T
    for h in range(1, lag + 1):
        lrv += 2.0 * (1.0 - h / (lag + 1.0)) * (e[h:] @ e[:-h]) / T
    if lrv <= 0.0:
        raise DegenerateSeriesError("zero long-run variance")
    s = np.cumsum(e)
    stat = float((s @ s) / (T * T * lrv))
    for critical, bracket in KPSS_CRITICAL:
        if stat < critical:
            return stat, bracket
    return stat, KPSS_REJECT_BRACKET


def describe(r, lag=None):
    """Sample statistics of a return series plus the KPSS level test.

    sd uses the T-1 denominator; skewness and excess kurtosis use central
    moments with denominator T. Constant series raise DegenerateSeriesError.
    """
    x = np.asarray(r.values, dtype=np.float64)
    T = x.size
    if T < 4:
        raise InsufficientDataError(f"describe needs at least 4 points, got {T}")
    mean = x.mean()
    centered = x - mean
    m2 = np.mean(centered**2)
    if m2 <= 0.0:
        raise DegenerateSeriesError("zero variance, skewness undefined")
    m3 = np.mean(centered**3)
    m4 = np.mean(centered**4)
    stat, bracket = kpss_level(r, lag=lag)
    return StatsSummary(
        mean=float(mean),
        min=float(x.min()),
        max=float(x.max()),
        sd=float(x.std(ddof=1)),
        skewness=float(m3 / m2**1.5),
        excess_kurtosis=float(m4 / m2**2 - 3.0),
        kpss_stat=stat,
        kpss_p_bracket=bracket,
    )
