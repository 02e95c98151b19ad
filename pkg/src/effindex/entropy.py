"""Approximate entropy and its surrogate-normalized variant.

Raw approximate entropy (Pincus) is Phi^m(r) - Phi^(m+1)(r) where Phi^m is
the average log correlation sum of length-m windows under the Chebyshev
distance with tolerance r; self-matches are counted so every log is finite.
The raw value is unbounded, so for the efficiency index it is divided by its
average over seeded random permutations of the same data, calibrating a
fully random series to 1 and deterministic structure toward 0.
"""

from dataclasses import dataclass

import numpy as np

from . import _kernels, synth
from .exceptions import DegenerateSeriesError


@dataclass
class EntropyEstimate:
    raw_apen: float
    normalized: float
    m: int
    r: float
    surrogates: int
    seed: int


def _check_input(x, m, r, min_extra):
    x = np.asarray(x, dtype=np.float64)
    if m < 1:
        raise ValueError(f"embedding dimension must be positive, got {m}")
    if r <= 0.0:
        raise ValueError(f"tolerance must be positive, got {r}")
    if x.size < m + min_extra:
        raise ValueError(
            f"series of length {x.size} too short for embedding dimension {m}"
        )
    if not np.all(np.isfinite(x)):
        raise ValueError("entropy input must be finite")
    return x


def correlation_sum(x, m, r):
    """Per-window correlation sums C_i^m(r) and their average C^m(r).

    C_i^m(r) is the fraction of windows within Chebyshev distance r of
    window i (self-match included), so C_i >= 1/(T-m+1) always.
    """
    x = _check_input(x, m, r, min_extra=1)
    counts = _kernels.window_counts(x, m, r)
    per_window = counts / counts.size
    return per_window, float(per_window.mean())


def apen(x, m, r):
    """Approximate entropy Phi^m(r) - Phi^(m+1)(r).

    Nonnegative up to floating rounding; negative values within 1e-12 of
    zero are snapped to zero.
    """
    x = _check_input(x, m, r, min_extra=2)
    counts_m, counts_m1 = _kernels.apen_counts(x, m, r)
    phi_m = float(np.mean(np.log(counts_m / counts_m.size)))
    phi_m1 = float(np.mean(np.log(counts_m1 / counts_m1.size)))
    value = phi_m - phi_m1
    if -1e-12 < value < 0.0:
        value = 0.0
    return value


def normalized_apen(x, m=2, r_multiplier=0.2, surrogates=10, seed=0):
    """Approximate entropy divided by its mean over shuffled surrogates.

    The tolerance is r_multiplier times the sample standard deviation, which
    the surrogates share exactly (shuffling preserves the value multiset), so
    the ratio is scale-free. Deterministic given the seed.
    """
    x = np.asarray(x, dtype=np.float64)
    if surrogates < 1:
        raise ValueError(f"surrogate count must be at least 1, got {surrogates}")
    sd = float(x.std(ddof=1)) if x.size > 1 else 0.0
    if not np.isfinite(sd) or sd <= 0.0:
        raise DegenerateSeriesError("zero variance, entropy tolerance undefined")
    r = r_multiplier * sd
    raw = apen(x, m, r)
    surrogate_seeds = np.random.SeedSequence(seed).generate_state(surrogates)
    baseline = 0.0
    for s in surrogate_seeds:
        baseline += apen(synth.shuffle(x, int(s)), m, r)
    baseline /= surrogates
    if raw == 0.0:
        normalized = 0.0
    elif baseline <= 0.0:
        raise DegenerateSeriesError("surrogate entropy baseline is not positive")
    else:
        normalized = raw / baseline
    return EntropyEstimate(
        raw_apen=raw,
        normalized=normalized,
        m=m,
        r=r,
        surrogates=surrogates,
        seed=seed,
    )
