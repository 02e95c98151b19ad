"""Seeded synthetic series used as oracles by the validation suite.

All generators are deterministic functions of (parameters, seed). The
underlying RNG is numpy's PCG64 so that sequences reproduce bit-for-bit
across platforms; the algorithm name is exposed for run metadata.
"""

from dataclasses import dataclass

import numpy as np

RNG_ALGORITHM = "PCG64"

KINDS = ("fgn", "fbm", "white_noise", "ar1", "shuffle")


def _rng(seed):
    return np.random.Generator(np.random.PCG64(seed))


@dataclass
class GeneratorSpec:
    """Declarative description of one synthetic series.

    ``param`` is the Hurst exponent for fgn/fbm and phi for ar1; white_noise
    and shuffle ignore it.
    """

    kind: str
    length: int
    param: float = 0.5
    sigma: float = 1.0
    seed: int = 0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"kind must be one of {KINDS}, got {self.kind!r}")
        if self.length < 8:
            raise ValueError(f"length must be >= 8, got {self.length}")
        if self.sigma <= 0.0:
            raise ValueError(f"sigma must be positive, got {self.sigma}")
        if self.kind in ("fgn", "fbm") and not 0.0 < self.param < 1.0:
            raise ValueError(f"hurst must lie in (0, 1), got {self.param}")
        if self.kind == "ar1" and not -1.0 < self.param < 1.0:
            raise ValueError(f"phi must lie in (-1, 1), got {self.param}")


def generate(spec, base=None):
    """Realize a GeneratorSpec; shuffle requires the series to permute."""
    if spec.kind == "fgn":
        return fgn(spec.param, spec.length, spec.sigma, spec.seed)
    if spec.kind == "fbm":
        return fbm_path(spec.param, spec.length, spec.sigma, spec.seed)
    if spec.kind == "white_noise":
        return white_noise(spec.length, spec.sigma, spec.seed)
    if spec.kind == "ar1":
        return ar1(spec.param, spec.length, spec.sigma, spec.seed)
    if base is None:
        raise ValueError("shuffle needs a base series")
    return shuffle(base, spec.seed)


def fgn_autocov(hurst, lags, sigma=1.0):
    """Autocovariance gamma(k) of fractional Gaussian noise.

    gamma(k) = (sigma^2 / 2) * (|k+1|^2H - 2|k|^2H + |k-1|^2H)
    """
    k = np.asarray(lags, dtype=np.float64)
    h2 = 2.0 * hurst
    return 0.5 * sigma**2 * (
        np.abs(k + 1.0) ** h2 - 2.0 * np.abs(k) ** h2 + np.abs(k - 1.0) ** h2
    )


def _fgn_cholesky(hurst, length, sigma, seed):
    gamma = fgn_autocov(hurst, np.arange(length), sigma)
    idx = np.arange(length)
    cov = gamma[np.abs(idx[:, None] - idx[None, :])]
    chol = np.linalg.cholesky(cov)
    return chol @ _rng(seed).standard_normal(length)


def fgn(hurst, length, sigma=1.0, seed=0):
    """Fractional Gaussian noise by circulant embedding of the autocovariance.

    Falls back to a Cholesky factorization for length <= 1024 should the
    embedding fail to be nonnegative definite (it does not for fGn in
    practice); larger non-embeddable requests raise rather than return a
    silently corrupted sequence.
    """
    if not 0.0 < hurst < 1.0:
        raise ValueError(f"hurst must lie in (0, 1), got {hurst}")
    if length < 8:
        raise ValueError(f"length must be >= 8, got {length}")
    if sigma <= 0.0:
        raise ValueError(f"sigma must be positive, got {sigma}")
    gamma = fgn_autocov(hurst, np.arange(length + 1), sigma)
    # circulant first row of size 2*length: gamma(0..length), gamma(length-1..1)
    circ = np.concatenate([gamma, gamma[-2:0:-1]])
    eig = np.fft.fft(circ).real
    if eig.min() < -1e-8 * eig.max():
        if length <= 1024:
            return _fgn_cholesky(hurst, length, sigma, seed)
        raise ValueError(
            f"circulant embedding not nonnegative definite (H={hurst}, T={length})"
        )
    eig = np.clip(eig, 0.0, None)
    size = 2 * length
    rng = _rng(seed)
    z = np.empty(size, dtype=np.complex128)
    z[0] = rng.standard_normal()
    z[length] = rng.standard_normal()
    v = rng.standard_normal((length - 1, 2))
    z[1:length] = (v[:, 0] + 1j * v[:, 1]) / np.sqrt(2.0)
    z[length + 1:] = np.conj(z[length - 1:0:-1])
    x = np.fft.ifft(np.sqrt(eig) * z) * np.sqrt(size)
    return np.ascontiguousarray(x.real[:length])


def fbm_path(hurst, length, sigma=1.0, seed=0):
    """Fractional Brownian motion path: cumulative sum of fgn increments."""
    return np.cumsum(fgn(hurst, length, sigma, seed))


def white_noise(length, sigma=1.0, seed=0):
    """i.i.d. Gaussian noise with standard deviation sigma."""
    if length < 1:
        raise ValueError(f"length must be positive, got {length}")
    if sigma <= 0.0:
        raise ValueError(f"sigma must be positive, got {sigma}")
    return sigma * _rng(seed).standard_normal(length)


def ar1(phi, length, sigma=1.0, seed=0, burn_in=1000):
    """AR(1) sequence x_t = phi * x_{t-1} + eps_t with the burn-in discarded."""
    if not -1.0 < phi < 1.0:
        raise ValueError(f"phi must lie in (-1, 1), got {phi}")
    if length < 1:
        raise ValueError(f"length must be positive, got {length}")
    eps = sigma * _rng(seed).standard_normal(length + burn_in)
    x = np.empty(length + burn_in)
    prev = 0.0
    for t in range(length + burn_in):
        prev = phi * prev + eps[t]
        x[t] = prev
    return x[burn_in:]


def shuffle(x, seed):
    """Uniformly random permutation of x, deterministic given seed.

    Values are moved, never recomputed, so the multiset is preserved exactly.
    """
    x = np.asarray(x)
    if x.size == 0:
        raise ValueError("cannot shuffle an empty sequence")
    return x[_rng(seed).permutation(x.size)]
