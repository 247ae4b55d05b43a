"""Batch kernels over 2-D arrays of words (one word per row).

Every kernel exists twice: a numba ``@njit`` loop and a vectorised numpy
twin.  The exported names dispatch to the numba version unless numba is
missing or ``NOISYINS_BACKEND=numpy`` is set in the environment.  Both
versions must agree bit-for-bit; ``tests/test_kernels.py`` checks this.

Column layout of :func:`word_stats` (positions are 1-based):

====  =============================================
SUM   sum of symbols
WSUM  sum of ``i * x_i``
VT    sum of ``(i - 1) * beta_i``
SVT   sum of ``i * beta_i``
ASC   sum of ``beta_i``
RUN   longest run of equal consecutive symbols
====  =============================================

where ``beta_1 = 1`` and ``beta_i = [x_i >= x_{i-1}]``.
"""

from __future__ import annotations

import os

import numpy as np

SUM, WSUM, VT, SVT, ASC, RUN = range(6)
N_STATS = 6


def _as_rows(words) -> np.ndarray:
    arr = np.asarray(words, dtype=np.int64)
    if arr.ndim == 1:
        arr = arr.reshape(1, -1)
    return np.ascontiguousarray(arr)


# --------------------------------------------------------------------- numpy


def word_stats_numpy(words: np.ndarray) -> np.ndarray:
    x = _as_rows(words)
    m, n = x.shape
    out = np.zeros((m, N_STATS), dtype=np.int64)
    if n == 0:
        return out
    pos = np.arange(1, n + 1, dtype=np.int64)
    beta = np.ones((m, n), dtype=np.int64)
    beta[:, 1:] = x[:, 1:] >= x[:, :-1]
    out[:, SUM] = x.sum(axis=1)
    out[:, WSUM] = x @ pos
    out[:, VT] = beta @ (pos - 1)
    out[:, SVT] = beta @ pos
    out[:, ASC] = beta.sum(axis=1)
    # run lengths via "position of last run start" trick
    starts = np.ones((m, n), dtype=bool)
    starts[:, 1:] = x[:, 1:] != x[:, :-1]
    last_start = np.maximum.accumulate(np.where(starts, pos - 1, 0), axis=1)
    out[:, RUN] = (pos - last_start).max(axis=1)
    return out


def irreducible_mask_numpy(words: np.ndarray, q: int) -> np.ndarray:
    x = _as_rows(words)
    if x.shape[1] < 2:
        return np.ones(x.shape[0], dtype=bool)
    a, b = x[:, :-1], x[:, 1:]
    return ~((b == a) | (b == q - 1 - a)).any(axis=1)


def signature_lengths_numpy(words: np.ndarray, q: int) -> np.ndarray:
    x = _as_rows(words)
    m, n = x.shape
    if n == 0:
        return np.zeros(m, dtype=np.int64)
    a, b = x[:, :-1], x[:, 1:]
    breaks = (b != a) & (b != q - 1 - a)
    return 1 + breaks.sum(axis=1).astype(np.int64)


# --------------------------------------------------------------------- numba

try:
    from numba import config as _numba_config
    from numba import njit, prange

    # probing TBB first emits a version warning on common installs
    if _numba_config.THREADING_LAYER == "default":
        _numba_config.THREADING_LAYER = "workqueue"
    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False


if HAVE_NUMBA:

    @njit(cache=True, parallel=True)
    def _word_stats_nb(x):
        m, n = x.shape
        out = np.zeros((m, N_STATS), dtype=np.int64)
        for r in prange(m):
            if n == 0:
                continue
            s = x[r, 0]
            ws = x[r, 0]
            vt = 0
            svt = 1
            asc = 1
            run = 1
            best = 1
            for i in range(1, n):
                v = x[r, i]
                s += v
                ws += (i + 1) * v
                if v >= x[r, i - 1]:
                    vt += i
                    svt += i + 1
                    asc += 1
                if v == x[r, i - 1]:
                    run += 1
                    if run > best:
                        best = run
                else:
                    run = 1
            out[r, SUM] = s
            out[r, WSUM] = ws
            out[r, VT] = vt
            out[r, SVT] = svt
            out[r, ASC] = asc
            out[r, RUN] = best
        return out

    @njit(cache=True, parallel=True)
    def _irreducible_mask_nb(x, q):
        m, n = x.shape
        out = np.ones(m, dtype=np.bool_)
        for r in prange(m):
            for i in range(1, n):
                prev = x[r, i - 1]
                v = x[r, i]
                if v == prev or v == q - 1 - prev:
                    out[r] = False
                    break
        return out

    @njit(cache=True, parallel=True)
    def _signature_lengths_nb(x, q):
        m, n = x.shape
        out = np.zeros(m, dtype=np.int64)
        for r in prange(m):
            if n == 0:
                continue
            blocks = 1
            for i in range(1, n):
                prev = x[r, i - 1]
                v = x[r, i]
                if v != prev and v != q - 1 - prev:
                    blocks += 1
            out[r] = blocks
        return out

    def word_stats_numba(words: np.ndarray) -> np.ndarray:
        return _word_stats_nb(_as_rows(words))

    def irreducible_mask_numba(words: np.ndarray, q: int) -> np.ndarray:
        return _irreducible_mask_nb(_as_rows(words), q)

    def signature_lengths_numba(words: np.ndarray, q: int) -> np.ndarray:
        return _signature_lengths_nb(_as_rows(words), q)


# ------------------------------------------------------------------ dispatch

BACKEND = os.environ.get("NOISYINS_BACKEND", "numba" if HAVE_NUMBA else "numpy").lower()
if BACKEND not in ("numba", "numpy"):
    raise ImportError(f"NOISYINS_BACKEND must be 'numba' or 'numpy', got {BACKEND!r}")
if BACKEND == "numba" and not HAVE_NUMBA:
    BACKEND = "numpy"

if BACKEND == "numba":
    word_stats = word_stats_numba
    irreducible_mask = irreducible_mask_numba
    signature_lengths = signature_lengths_numba
else:
    word_stats = word_stats_numpy
    irreducible_mask = irreducible_mask_numpy
    signature_lengths = signature_lengths_numpy


def set_threads(k: int) -> None:
    """Set the numba worker count; a no-op on the numpy backend."""
    if BACKEND == "numba" and k > 0:
        import numba

        numba.set_num_threads(min(k, numba.config.NUMBA_NUM_THREADS))


def all_words(q: int, n: int) -> np.ndarray:
    """Every word of length ``n`` over ``Z_q``, lexicographically ordered."""
    if n == 0:
        return np.zeros((1, 0), dtype=np.int64)
    grids = np.indices((q,) * n, dtype=np.int64)
    return grids.reshape(n, -1).T.copy()


def irreducible_words(q: int, n: int) -> np.ndarray:
    """All irreducible words of length ``n`` in lexicographic order.

    Grows prefixes one column at a time; each symbol has ``q - 2`` admissible
    successors (everything except itself and its complement).
    """
    if n <= 0:
        return np.zeros((0, max(n, 0)), dtype=np.int64)
    succ = np.array(
        [[t for t in range(q) if t != s and t != q - 1 - s] for s in range(q)],
        dtype=np.int64,
    )
    arr = np.arange(q, dtype=np.int64).reshape(q, 1)
    for _ in range(n - 1):
        nxt = succ[arr[:, -1]].reshape(-1, 1)
        arr = np.hstack([np.repeat(arr, q - 2, axis=0), nxt])
    return arr
