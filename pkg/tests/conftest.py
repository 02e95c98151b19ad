import numpy as np
import pytest

from effindex import synth


def make_price_csv(prices, start="2000-01-03"):
    """CSV text with a date,close header and consecutive ISO dates."""
    import datetime as dt

    day = dt.date.fromisoformat(start)
    lines = ["date,close"]
    for p in prices:
        lines.append(f"{day.isoformat()},{p}")
        day += dt.timedelta(days=1)
    return "\n".join(lines) + "\n"


def synthetic_prices(length=3001, seed=0, sigma=0.01, start_price=100.0):
    """Geometric random-walk closes driven by seeded Gaussian returns."""
    returns = sigma * synth.white_noise(length - 1, seed=seed)
    return start_price * np.exp(np.concatenate([[0.0], np.cumsum(returns)]))


@pytest.fixture(scope="session", autouse=True)
def _warm_kernels():
    # compile the jitted counting kernels once so timed tests measure steady state
    from effindex import entropy

    entropy.apen(synth.white_noise(200, seed=0), 2, 0.2)
