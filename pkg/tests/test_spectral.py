import numpy as np
import pytest

from effindex import synth
from effindex.exceptions import DegenerateSpectrumError, InsufficientBandError
from effindex.spectral import bandwidth, gph, local_whittle, periodogram


def test_periodogram_constant_series_is_zero():
    pg = periodogram(np.full(128, 3.25))
    assert pg.ordinates.shape == (64,)
    assert np.all(pg.ordinates == 0.0)


def test_periodogram_cosine_peak_dominates():
    T, k = 256, 10
    t = np.arange(1, T + 1)
    x = np.cos(2 * np.pi * k * t / T)
    pg = periodogram(x)
    peak = pg.ordinates[k - 1]
    rest = np.delete(pg.ordinates, k - 1)
    assert peak >= 1e3 * rest.max()


def test_periodogram_frequencies():
    pg = periodogram(synth.white_noise(100, seed=1))
    assert pg.frequencies.shape == (50,)
    assert pg.frequencies[0] == pytest.approx(2 * np.pi / 100)
    assert pg.frequencies[-1] == pytest.approx(np.pi)
    assert np.all(np.diff(pg.frequencies) > 0)


@pytest.mark.parametrize("T", [255, 511, 1001])
def test_parseval_odd_length(T):
    # for odd T every nonzero frequency appears twice in the full spectrum,
    # so 2 * sum(I) / T recovers the variance of a zero-mean series
    x = synth.white_noise(T, seed=T)
    x = x - x.mean()
    pg = periodogram(x)
    lhs = 2.0 * pg.ordinates.sum() / T
    var = float(np.mean(x**2))
    assert abs(lhs - var) / var < 1e-9


@pytest.mark.parametrize("T", [256, 512])
def test_parseval_even_length_counts_nyquist_once(T):
    # the Nyquist ordinate is its own mirror image and must not be doubled
    x = synth.white_noise(T, seed=T)
    x = x - x.mean()
    pg = periodogram(x)
    lhs = (2.0 * pg.ordinates[:-1].sum() + pg.ordinates[-1]) / T
    var = float(np.mean(x**2))
    assert abs(lhs - var) / var < 1e-9


@pytest.mark.parametrize("T", [32, 129, 256, 511, 512])
def test_fft_agrees_with_direct_summation(T):
    x = synth.white_noise(T, seed=T + 1)
    fft_ords = periodogram(x, method="fft").ordinates
    direct_ords = periodogram(x, method="direct").ordinates
    assert np.max(np.abs(fft_ords - direct_ords)) / fft_ords.max() < 1e-9


def test_periodogram_validation():
    with pytest.raises(ValueError):
        periodogram(np.ones(7))
    with pytest.raises(ValueError):
        periodogram(np.array([1.0, np.nan] + [0.0] * 14))
    with pytest.raises(ValueError):
        periodogram(synth.white_noise(64, seed=0), method="welch")


def test_bandwidth_examples():
    assert bandwidth(4096, 0.5) == 64
    assert bandwidth(10, 0.9) == 5  # capped at T/2
    assert bandwidth(16, 0.1) == 4  # floored at 4
    with pytest.raises(ValueError):
        bandwidth(4096, 1.0)
    with pytest.raises(ValueError):
        bandwidth(7, 0.5)


def test_band_limits_enforced():
    x = synth.white_noise(64, seed=2)
    with pytest.raises(ValueError):
        local_whittle(x, 3)
    with pytest.raises(ValueError):
        local_whittle(x, 33)
    with pytest.raises(ValueError):
        gph(x, 33)


def test_local_whittle_iid_bias_and_dispersion():
    T, m, reps = 4096, 64, 200
    values = np.array(
        [local_whittle(synth.white_noise(T, seed=s), m).value for s in range(reps)]
    )
    assert abs(values.mean() - 0.5) < 0.03
    expected_sd = 1.0 / (2.0 * np.sqrt(m))
    assert abs(values.std(ddof=1) - expected_sd) < 0.35 * expected_sd


def test_local_whittle_fgn_bias():
    T, m, reps = 4096, 64, 200
    values = np.array(
        [local_whittle(synth.fgn(0.7, T, seed=s), m).value for s in range(reps)]
    )
    assert abs(values.mean() - 0.7) < 0.03


def test_gph_iid_and_fgn_bias():
    T, m, reps = 4096, 64, 200
    iid = np.array([gph(synth.white_noise(T, seed=s), m).value for s in range(reps)])
    assert abs(iid.mean() - 0.5) < 0.04
    anti = np.array([gph(synth.fgn(0.3, T, seed=s), m).value for s in range(reps)])
    assert abs(anti.mean() - 0.3) < 0.04


def test_estimate_metadata():
    x = synth.fgn(0.6, 1024, seed=5)
    m = bandwidth(1024)
    lw = local_whittle(x, m)
    gp = gph(x, m)
    assert lw.method == "LocalWhittle" and gp.method == "GPH"
    assert lw.m == gp.m == m
    assert lw.stderr == pytest.approx(1.0 / (2.0 * np.sqrt(m)))
    assert gp.stderr == pytest.approx(np.pi / np.sqrt(6.0 * 1024))
    assert 0.0 <= lw.value < 1.0
    assert 0.0 <= gp.value < 1.0
    assert not gp.clamped


@pytest.mark.parametrize("c", [3.7e-4, 2.5e5])
def test_scale_invariance(c):
    x = synth.fgn(0.6, 2048, seed=11)
    m = bandwidth(2048)
    assert abs(local_whittle(c * x, m).value - local_whittle(x, m).value) < 1e-8
    assert abs(gph(c * x, m).value - gph(x, m).value) < 1e-8


def test_sign_invariance():
    x = synth.fgn(0.4, 2048, seed=12)
    m = bandwidth(2048)
    pg_pos = periodogram(x).ordinates
    pg_neg = periodogram(-x).ordinates
    assert np.max(np.abs(pg_pos - pg_neg)) <= 1e-10 * pg_pos.max()
    assert abs(local_whittle(-x, m).value - local_whittle(x, m).value) < 1e-10
    assert abs(gph(-x, m).value - gph(x, m).value) < 1e-10


@pytest.mark.parametrize("seed", [11, 42, 99])
def test_optimizer_matches_dense_grid(seed):
    # 1000-point grid scan of the profiled objective as an optimizer oracle:
    # the optimizer must land in the same basin (within one grid spacing of
    # the grid argmin) and do at least as well as every grid point
    x = synth.fgn(0.65, 2048, seed=seed)
    m = bandwidth(2048)
    pg = periodogram(x)
    ords = pg.ordinates[:m]
    log_freqs = np.log(pg.frequencies[:m])
    mean_log = log_freqs.mean()

    def objective(h):
        return np.log(np.mean(np.exp((2 * h - 1) * log_freqs) * ords)) - (2 * h - 1) * mean_log

    grid = np.linspace(0.0, 0.999999, 1000)
    values = [objective(h) for h in grid]
    grid_argmin = grid[int(np.argmin(values))]
    estimate = local_whittle(x, m).value
    assert abs(estimate - grid_argmin) < 1e-3  # one grid spacing
    assert objective(estimate) <= min(values) + 1e-12


def test_small_band_reduces_short_memory_bias():
    # AR(1) has no long memory; a wide band soaks up its short-memory slope
    T = 2048
    m_small = bandwidth(T, 0.5)
    m_full = T // 2
    small, full = [], []
    for s in range(100):
        x = synth.ar1(0.3, T, seed=3000 + s)
        small.append(local_whittle(x, m_small).value - 0.5)
        full.append(local_whittle(x, m_full).value - 0.5)
    assert abs(np.mean(small)) < abs(np.mean(full))


def test_degenerate_spectrum_errors():
    flat = np.full(64, 5.0)
    with pytest.raises(DegenerateSpectrumError):
        local_whittle(flat, 8)
    with pytest.raises(InsufficientBandError):
        gph(flat, 8)
