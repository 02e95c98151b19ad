import numpy as np
import pytest

from effindex import synth
from effindex.exceptions import DegeneratePathError
from effindex.fractal import abs_scale, genton, hall_wood, variogram2


def ramp(points=1025, c=1.0):
    # dyadic grid keeps the increments exact in floating point
    n = points - 1
    return c * np.arange(points) / n


def test_abs_scale_ramp_ratio_two():
    x = ramp(1025)
    a1 = abs_scale(x, 1)
    a2 = abs_scale(x, 2)
    assert a1 == pytest.approx(1.0 / 1024, rel=1e-12)
    assert a2 / a1 == pytest.approx(2.0, rel=1e-12)


def test_abs_scale_constant_path():
    assert abs_scale(np.full(100, 2.0), 1) == 0.0
    assert abs_scale(np.full(100, 2.0), 2) == 0.0


def test_abs_scale_alternating_path():
    x = np.tile([1.0, -1.0], 50)  # 100 points, 99 unit-grid increments
    assert abs_scale(x, 1) == pytest.approx(2.0, rel=1e-12)
    assert abs_scale(x, 2) == 0.0


def test_abs_scale_validation():
    with pytest.raises(ValueError):
        abs_scale(np.ones(4), 2)
    with pytest.raises(ValueError):
        abs_scale(np.ones(100), 3)


def test_variogram_ramp():
    for lag in (1, 2):
        v = variogram2(ramp(513, c=3.0), lag)
        assert v == pytest.approx((3.0 * lag / 512) ** 2 / 2.0, rel=1e-12)


def test_variogram_constant_path():
    assert variogram2(np.full(64, 1.5), 1) == 0.0


def test_variogram_random_walk_ratio():
    # independent increments double the variogram at double lag
    ratios = []
    for s in range(200):
        walk = np.cumsum(synth.white_noise(2048, seed=500 + s))
        ratios.append(variogram2(walk, 2) / variogram2(walk, 1))
    assert np.mean(ratios) == pytest.approx(2.0, abs=0.1)


def test_hall_wood_ramp_is_one():
    est = hall_wood(ramp(1025))
    assert est.value == pytest.approx(1.0, abs=1e-12)
    assert est.method == "HallWood"
    assert est.out_of_range  # 1.0 sits outside the open interval (1, 2]


def test_genton_ramp_is_one():
    est = genton(ramp(1024))
    assert est.value == pytest.approx(1.0, abs=1e-12)
    assert est.method == "Genton"


@pytest.mark.parametrize("estimator", [hall_wood, genton])
def test_random_walk_dimension(estimator):
    values = [
        estimator(np.cumsum(synth.white_noise(2048, seed=700 + s))).value
        for s in range(200)
    ]
    assert abs(np.mean(values) - 1.5) < 0.05


def test_hall_wood_persistent_path():
    values = [hall_wood(synth.fbm_path(0.3, 2048, seed=800 + s)).value for s in range(200)]
    assert abs(np.mean(values) - 1.7) < 0.06


def test_genton_iid_sequence_as_path():
    # lag-invariant increment variance pushes the log ratio to zero
    values = [genton(synth.white_noise(2048, seed=900 + s)).value for s in range(200)]
    assert abs(np.mean(values) - 2.0) < 0.05


@pytest.mark.parametrize("hurst", [0.2, 0.5, 0.8])
def test_dimension_plus_hurst_is_two(hurst):
    hw_vals, g_vals = [], []
    for s in range(200):
        path = synth.fbm_path(hurst, 2048, seed=1000 + s)
        hw_vals.append(hall_wood(path).value)
        g_vals.append(genton(path).value)
    assert 1.93 <= np.mean(hw_vals) + hurst <= 2.07
    assert 1.93 <= np.mean(g_vals) + hurst <= 2.07


@pytest.mark.parametrize("a,b", [(-2.5, 7.0), (1e-3, -4.0)])
def test_affine_invariance(a, b):
    path = synth.fbm_path(0.4, 2048, seed=3)
    assert abs(hall_wood(a * path + b).value - hall_wood(path).value) < 1e-10
    assert abs(genton(a * path + b).value - genton(path).value) < 1e-10


def test_time_reversal_invariance():
    # odd point count: the lag-2 boxes tile the path exactly in both directions
    path = synth.fbm_path(0.4, 2049, seed=4)
    assert abs(hall_wood(path[::-1]).value - hall_wood(path).value) < 1e-10
    assert abs(genton(path[::-1]).value - genton(path).value) < 1e-10


def test_out_of_range_flag():
    inside = genton(np.cumsum(synth.white_noise(512, seed=5)))
    assert not inside.out_of_range
    assert 1.0 < inside.value <= 2.0


def test_degenerate_paths_raise():
    with pytest.raises(DegeneratePathError):
        hall_wood(np.full(64, 3.0))
    with pytest.raises(DegeneratePathError):
        genton(np.full(64, 3.0))
    with pytest.raises(DegeneratePathError):
        hall_wood(np.tile([1.0, -1.0], 32))  # lag-2 increments vanish
    with pytest.raises(ValueError):
        hall_wood(np.ones(7))
