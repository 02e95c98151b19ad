"""Hot inner loops for the correlation-sum machinery.

Template matching under the Chebyshev (max-abs) distance is O(T^2 * m) and
dominates the whole pipeline, so the counting loops are JIT-compiled with
numba by default. The jitted scan orders windows by their first coordinate
and walks a two-pointer band, which prunes most pairs without changing the
worst-case complexity (no trees, counts are exact). A pure-numpy path is
kept for environments without a working numba; select it explicitly with

    EFFINDEX_BACKEND=numpy

(``EFFINDEX_BACKEND=numba`` forces numba and fails loudly if unavailable).
Both backends return identical integer counts; ``benchmarks/bench_backends.py``
compares their throughput.
"""

import os

import numpy as np


def _numpy_window_counts(x, m, r):
    # counts[i] = #{j : max_k |x[i+k] - x[j+k]| <= r}, self-match included
    tpl = np.lib.stride_tricks.sliding_window_view(x, m)
    n = tpl.shape[0]
    counts = np.empty(n, dtype=np.int64)
    for i in range(n):
        counts[i] = np.count_nonzero(np.abs(tpl - tpl[i]).max(axis=1) <= r)
    return counts


def _numpy_apen_counts(x, m, r):
    return _numpy_window_counts(x, m, r), _numpy_window_counts(x, m + 1, r)


try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a hard dependency by default
    njit = None
    HAVE_NUMBA = False


if HAVE_NUMBA:

    @njit(cache=True)
    def _numba_window_counts(x, m, r):
        n = x.shape[0] - m + 1
        first = x[:n].copy()
        order = np.argsort(first)
        xs = first[order]
        counts = np.ones(n, dtype=np.int64)  # self-match
        hi = 0
        for a in range(n):
            if hi < a + 1:
                hi = a + 1
            while hi < n and xs[hi] - xs[a] <= r:
                hi += 1
            ia = order[a]
            for b in range(a + 1, hi):
                jb = order[b]
                ok = True
                for k in range(1, m):
                    if abs(x[ia + k] - x[jb + k]) > r:
                        ok = False
                        break
                if ok:
                    counts[ia] += 1
                    counts[jb] += 1
        return counts

    @njit(cache=True)
    def _numba_apen_counts(x, m, r):
        # Fused pass: counts for window lengths m and m+1 share the pair scan.
        T = x.shape[0]
        n1 = T - m + 1
        n2 = T - m
        first = x[:n1].copy()
        order = np.argsort(first)
        xs = first[order]
        cm = np.ones(n1, dtype=np.int64)
        cm1 = np.ones(n2, dtype=np.int64)
        hi = 0
        for a in range(n1):
            if hi < a + 1:
                hi = a + 1
            while hi < n1 and xs[hi] - xs[a] <= r:
                hi += 1
            ia = order[a]
            for b in range(a + 1, hi):
                jb = order[b]
                ok = True
                for k in range(1, m):
                    if abs(x[ia + k] - x[jb + k]) > r:
                        ok = False
                        break
                if ok:
                    cm[ia] += 1
                    cm[jb] += 1
                    if ia < n2 and jb < n2:
                        if abs(x[ia + m] - x[jb + m]) <= r:
                            cm1[ia] += 1
                            cm1[jb] += 1
        return cm, cm1


def _pick_backend():
    requested = os.environ.get("EFFINDEX_BACKEND", "").strip().lower()
    if requested not in ("", "numba", "numpy"):
        raise ValueError(
            f"EFFINDEX_BACKEND must be 'numba' or 'numpy', got {requested!r}"
        )
    if requested == "numpy":
        return "numpy"
    if requested == "numba" and not HAVE_NUMBA:
        raise ImportError("EFFINDEX_BACKEND=numba but numba is not importable")
    return "numba" if HAVE_NUMBA else "numpy"


BACKEND = _pick_backend()

if BACKEND == "numba":
    _window_counts_impl = _numba_window_counts
    _apen_counts_impl = _numba_apen_counts
else:
    _window_counts_impl = _numpy_window_counts
    _apen_counts_impl = _numpy_apen_counts


def window_counts(x, m, r):
    """Per-window match counts under Chebyshev distance, self-match included."""
    x = np.ascontiguousarray(x, dtype=np.float64)
    return _window_counts_impl(x, int(m), float(r))


def apen_counts(x, m, r):
    """Match counts for window lengths m and m+1 in one fused pair scan."""
    x = np.ascontiguousarray(x, dtype=np.float64)
    return _apen_counts_impl(x, int(m), float(r))
