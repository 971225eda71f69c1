"""Integer lattice kernels: window enumeration and halfspace filtering.

Two execution paths for the hot loops. When numba is installed the filter is
JIT-compiled; the env flag PERMUTOKIT_NUMBA=0 forces the pure-numpy fallback.
All values in scope are small integers, so int64 arithmetic is exact.
"""
from __future__ import annotations

import os
from functools import lru_cache

import numpy as np

try:
    from numba import njit

    numba_installed = True
except ImportError:  # pragma: no cover - depends on environment
    numba_installed = False

_flag = os.environ.get("PERMUTOKIT_NUMBA", "").strip().lower()
use_numba = numba_installed and _flag not in ("0", "false", "no", "off")


def _filter_py(cands, A, b):
    m = A.shape[0]
    n = A.shape[1]
    out = np.empty(cands.shape[0], dtype=np.bool_)
    for r in range(cands.shape[0]):
        ok = True
        for i in range(m):
            acc = 0
            for j in range(n):
                acc += A[i, j] * cands[r, j]
            if acc > b[i]:
                ok = False
                break
        out[r] = ok
    return out


if use_numba:
    _filter_jit = njit(cache=True)(_filter_py)


def _filter_numpy(cands, A, b):
    if A.shape[0] == 0:
        return np.ones(cands.shape[0], dtype=np.bool_)
    return np.all(cands @ A.T <= b, axis=1)


def lattice_filter(cands, A, b, force_path: str | None = None):
    """Boolean mask of candidate rows satisfying A @ x <= b.

    cands: (N, n) int64; A: (m, n) int64; b: (m,) int64.
    force_path: None for the configured default, "numpy" or "numba" to pin.
    """
    cands = np.ascontiguousarray(cands, dtype=np.int64)
    A = np.ascontiguousarray(A, dtype=np.int64)
    b = np.ascontiguousarray(b, dtype=np.int64)
    path = force_path or ("numba" if use_numba else "numpy")
    if path == "numba":
        if not use_numba:
            raise RuntimeError("numba path requested but not enabled")
        if A.shape[0] == 0:
            return np.ones(cands.shape[0], dtype=np.bool_)
        return _filter_jit(cands, A, b)
    if path == "numpy":
        return _filter_numpy(cands, A, b)
    raise ValueError(f"unknown path {path!r}")


@lru_cache(maxsize=64)
def zero_sum_box(n: int, bound: int) -> np.ndarray:
    """All integer vectors in [-bound, bound]^n with coordinate sum zero,
    lexicographically ordered, as a read-only (N, n) int64 array."""
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    if n == 0:
        out = np.zeros((1, 0), dtype=np.int64)
    elif n == 1:
        out = np.zeros((1, 1), dtype=np.int64)
    else:
        side = np.arange(-bound, bound + 1, dtype=np.int64)
        grids = np.meshgrid(*([side] * (n - 1)), indexing="ij")
        first = np.stack([g.ravel() for g in grids], axis=1)
        last = -first.sum(axis=1)
        keep = np.abs(last) <= bound
        out = np.concatenate([first[keep], last[keep, None]], axis=1)
    out.setflags(write=False)
    return out


def ranged_sum_box(lo, hi, total: int) -> np.ndarray:
    """All integer vectors with lo <= x <= hi coordinatewise and sum == total,
    lexicographically ordered, as an (N, n) int64 array."""
    lo = np.asarray(lo, dtype=np.int64)
    hi = np.asarray(hi, dtype=np.int64)
    n = lo.shape[0]
    if n == 0:
        return np.zeros((1, 0), dtype=np.int64) if total == 0 else np.zeros((0, 0), dtype=np.int64)
    if np.any(lo > hi):
        return np.zeros((0, n), dtype=np.int64)
    if n == 1:
        if lo[0] <= total <= hi[0]:
            return np.array([[total]], dtype=np.int64)
        return np.zeros((0, 1), dtype=np.int64)
    sides = [np.arange(lo[j], hi[j] + 1, dtype=np.int64) for j in range(n - 1)]
    grids = np.meshgrid(*sides, indexing="ij")
    first = np.stack([g.ravel() for g in grids], axis=1)
    last = total - first.sum(axis=1)
    keep = (last >= lo[n - 1]) & (last <= hi[n - 1])
    return np.concatenate([first[keep], last[keep, None]], axis=1)
