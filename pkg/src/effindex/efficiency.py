"""Efficiency index, rankings and the per-series analysis pipeline.

The index is the distance of (Hurst, fractal dimension, normalized entropy)
estimates from the efficient-market point (0.5, 1.5, 1), each deviation
scaled by its measure range. Two conventions are exposed: the canonical
square-rooted distance (default) and the plain sum of squared scaled
deviations used by the bundled reference table; rankings are identical
under either since the square root is monotone.
"""

import math
from dataclasses import dataclass, field, replace

from . import fractal, spectral
from .entropy import normalized_apen
from .exceptions import EffindexError


@dataclass
class EfficiencyConfig:
    hurst_target: float = 0.5
    fractal_target: float = 1.5
    entropy_target: float = 1.0
    hurst_range: float = 1.0
    fractal_range: float = 1.0
    entropy_range: float = 2.0
    apply_sqrt: bool = True
    bandwidth_exponent: float = 0.5
    apen_m: int = 2
    apen_r_multiplier: float = 0.2
    surrogates: int = 10
    seed: int = 42

    def __post_init__(self):
        if min(self.hurst_range, self.fractal_range, self.entropy_range) <= 0.0:
            raise ValueError("measure ranges must be strictly positive")
        if not 0.0 < self.bandwidth_exponent < 1.0:
            raise ValueError(
                f"bandwidth exponent must lie in (0, 1), got {self.bandwidth_exponent}"
            )
        if self.surrogates < 1:
            raise ValueError("surrogate count must be at least 1")


@dataclass
class EfficiencyRecord:
    ticker: str
    hurst: float
    fractal: float
    entropy: float
    deviations: tuple
    ei: float
    country: str = ""
    rank: int | None = None
    details: dict = field(default_factory=dict)

    def to_csv_row(self):
        """One CSV row in reference-table column order."""
        return (
            f"{self.ticker},{self.country},{self.hurst:.6f},{self.fractal:.6f},"
            f"{self.entropy:.6f},{self.ei:.6f},{self.rank}"
        )

    def as_dict(self):
        return {
            "ticker": self.ticker,
            "country": self.country,
            "hurst": self.hurst,
            "fractal": self.fractal,
            "entropy": self.entropy,
            "ei": self.ei,
            "rank": self.rank,
        }


def combine_estimates(lw, gph_est, hw, g, ae):
    """Average the paired estimators into one value per measure."""
    return (
        0.5 * (lw.value + gph_est.value),
        0.5 * (hw.value + g.value),
        ae.normalized,
    )


def scaled_deviations(hurst, fractal_dim, entropy_value, cfg):
    return (
        (hurst - cfg.hurst_target) / cfg.hurst_range,
        (fractal_dim - cfg.fractal_target) / cfg.fractal_range,
        (entropy_value - cfg.entropy_target) / cfg.entropy_range,
    )


def efficiency_index(hurst, fractal_dim, entropy_value, cfg):
    """Distance of the three measures from the efficient-market point."""
    devs = scaled_deviations(hurst, fractal_dim, entropy_value, cfg)
    total = sum(d * d for d in devs)
    return math.sqrt(total) if cfg.apply_sqrt else total


def rank_records(records):
    """Rank ascending by index value (most efficient first), ties broken by
    ticker, ranks 1..N assigned on copies of the records."""
    if not records:
        raise ValueError("cannot rank an empty record list")
    tickers = [rec.ticker for rec in records]
    if len(set(tickers)) != len(tickers):
        dupes = sorted({t for t in tickers if tickers.count(t) > 1})
        raise ValueError(f"duplicate tickers: {', '.join(dupes)}")
    ordered = sorted(records, key=lambda rec: (rec.ei, rec.ticker))
    return [replace(rec, rank=i + 1) for i, rec in enumerate(ordered)]


def component_rankings(records):
    """Per-measure ranks, ascending by absolute scaled deviation.

    Returns a dict with 'hurst', 'fractal' and 'entropy' maps from ticker to
    rank; ties are broken by ticker like the main ranking.
    """
    if not records:
        raise ValueError("cannot rank an empty record list")
    tickers = [rec.ticker for rec in records]
    if len(set(tickers)) != len(tickers):
        raise ValueError("duplicate tickers")
    out = {}
    for pos, name in enumerate(("hurst", "fractal", "entropy")):
        ordered = sorted(records, key=lambda rec: (abs(rec.deviations[pos]), rec.ticker))
        out[name] = {rec.ticker: i + 1 for i, rec in enumerate(ordered)}
    return out


def component_rankings_csv(records):
    """Index rank next to the three per-measure ranks, one CSV row per ticker.

    Rows follow the index ranking (most efficient first).
    """
    ranked = rank_records(records)
    comp = component_rankings(records)
    lines = ["ticker,country,ei_rank,hurst_rank,fractal_rank,entropy_rank"]
    for rec in ranked:
        lines.append(
            f"{rec.ticker},{rec.country},{rec.rank},{comp['hurst'][rec.ticker]},"
            f"{comp['fractal'][rec.ticker]},{comp['entropy'][rec.ticker]}"
        )
    return "\n".join(lines) + "\n"


def spearman(a, b):
    """Spearman rank correlation for tie-free rank vectors.

    rho = 1 - 6 * sum(d^2) / (N * (N^2 - 1)); both inputs must be
    permutations of 1..N.
    """
    if len(a) != len(b):
        raise ValueError(f"rank vectors differ in length: {len(a)} vs {len(b)}")
    n = len(a)
    if n < 2:
        raise ValueError("need at least 2 ranks")
    expected = list(range(1, n + 1))
    if sorted(a) != expected or sorted(b) != expected:
        raise ValueError("rank vectors must be permutations of 1..N")
    d2 = sum((x - y) ** 2 for x, y in zip(a, b))
    return 1.0 - 6.0 * d2 / (n * (n * n - 1))


def analyze_series(returns, path, cfg=None, country=""):
    """Run all five estimators on one series and build its efficiency record.

    Hurst and entropy estimators consume the returns, the fractal estimators
    the log-price path. Estimator errors propagate with their own type,
    re-raised with the ticker prepended. Deterministic given cfg.seed.
    """
    cfg = cfg or EfficiencyConfig()
    if len(path.values) != len(returns.values) + 1:
        raise ValueError(
            f"{returns.ticker}: log-price path must be one element longer "
            f"than the return series"
        )
    try:
        m = spectral.bandwidth(len(returns.values), cfg.bandwidth_exponent)
        lw = spectral.local_whittle(returns.values, m)
        gph_est = spectral.gph(returns.values, m)
        hw = fractal.hall_wood(path.values)
        g = fractal.genton(path.values)
        ae = normalized_apen(
            returns.values,
            m=cfg.apen_m,
            r_multiplier=cfg.apen_r_multiplier,
            surrogates=cfg.surrogates,
            seed=cfg.seed,
        )
    except EffindexError as exc:
        raise type(exc)(f"{returns.ticker}: {exc}") from exc
    hurst, fractal_dim, entropy_value = combine_estimates(lw, gph_est, hw, g, ae)
    devs = scaled_deviations(hurst, fractal_dim, entropy_value, cfg)
    ei = efficiency_index(hurst, fractal_dim, entropy_value, cfg)
    return EfficiencyRecord(
        ticker=returns.ticker,
        country=country,
        hurst=hurst,
        fractal=fractal_dim,
        entropy=entropy_value,
        deviations=devs,
        ei=ei,
        details={
            "bandwidth": m,
            "local_whittle": lw.value,
            "gph": gph_est.value,
            "gph_clamped": gph_est.clamped,
            "hall_wood": hw.value,
            "genton": g.value,
            "fractal_out_of_range": hw.out_of_range or g.out_of_range,
            "raw_apen": ae.raw_apen,
        },
    )
