"""Fractal dimension of a sample path via Hall-Wood and Genton estimators.

Both estimators compare increment statistics at unit and double lag on the
grid i/n, n = len(path) - 1, and map their log ratio to a dimension in
(1, 2]: rough paths (local anti-persistence) score near 2, smooth locally
trending paths near 1, and a Brownian-type path 1.5.
"""

import math
from dataclasses import dataclass

import numpy as np

from .exceptions import DegeneratePathError

HALL_WOOD = "HallWood"
GENTON = "Genton"

_LOG2 = math.log(2.0)


@dataclass
class FractalEstimate:
    value: float
    method: str
    out_of_range: bool = False

    def __post_init__(self):
        self.out_of_range = not (1.0 < self.value <= 2.0)


def _as_path(x, lag):
    x = np.asarray(x, dtype=np.float64)
    if x.size < 2 * lag + 1:
        raise ValueError(f"path too short for lag {lag}: {x.size} points")
    if lag not in (1, 2):
        raise ValueError(f"lag must be 1 or 2, got {lag}")
    return x


def abs_scale(x, lag):
    """Box-counting scale statistic: (l/n) * sum of |lag-l| increments on the
    decimated grid, with n = len(x) - 1 grid steps."""
    x = _as_path(x, lag)
    n = x.size - 1
    boxes = n // lag
    increments = np.diff(x[::lag])[:boxes]
    return float(lag / n * np.abs(increments).sum())


def variogram2(x, lag):
    """Half mean squared lag-l increment over all n - l available pairs."""
    x = _as_path(x, lag)
    diffs = x[lag:] - x[:-lag]
    return float((diffs @ diffs) / (2.0 * diffs.size))


def _check_length(x):
    if np.asarray(x).size < 8:
        raise ValueError(f"fractal estimators need at least 8 points, got {np.asarray(x).size}")


def hall_wood(x):
    """Fractal dimension from the lag-2 / lag-1 ratio of absolute scales."""
    _check_length(x)
    a1 = abs_scale(x, 1)
    a2 = abs_scale(x, 2)
    if a1 <= 0.0 or a2 <= 0.0:
        raise DegeneratePathError("zero absolute-scale statistic (degenerate path)")
    value = 2.0 - (math.log(a2) - math.log(a1)) / _LOG2
    return FractalEstimate(value=value, method=HALL_WOOD)


def genton(x):
    """Fractal dimension from the lag-2 / lag-1 variogram ratio."""
    _check_length(x)
    v1 = variogram2(x, 1)
    v2 = variogram2(x, 2)
    if v1 <= 0.0 or v2 <= 0.0:
        raise DegeneratePathError("zero variogram (degenerate path)")
    value = 2.0 - (math.log(v2) - math.log(v1)) / (2.0 * _LOG2)
    return FractalEstimate(value=value, method=GENTON)
