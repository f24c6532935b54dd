"""Compiled batch kernel for independence existence tests.

The orbit scan spends nearly all its time answering "does this member
have an independent set of size t" for thousands of members per orbit.
This module JIT-compiles that test over batches of members (rows given
as an int64 matrix, one graph per row block).  Results are exact
booleans; callers fall back to the pure-Python path when numba is not
importable, with identical results.
"""

from __future__ import annotations

import numpy as np

try:
    from numba import njit

    AVAILABLE = True
except ImportError:  # pragma: no cover - exercised via VMRAMSEY_NO_NUMBA
    AVAILABLE = False

if AVAILABLE:

    @njit(cache=True)
    def _popcount(x: int) -> int:
        c = 0
        while x:
            x &= x - 1
            c += 1
        return c

    @njit(cache=True)
    def _exists_one(rows, n: int, t: int) -> bool:
        if t <= 0:
            return True
        if t > n:
            return False
        # vertices of an independent t-set have degree <= n - t
        bound = n - t
        pool = 0
        for v in range(n):
            if _popcount(rows[v]) <= bound:
                pool |= 1 << v
        if _popcount(pool) < t:
            return False
        # iterative include/exclude search on the lowest available vertex
        stack_cand = np.empty(n + 2, np.int64)
        stack_size = np.empty(n + 2, np.int64)
        sp = 0
        cand = pool
        size = 0
        while True:
            if size >= t:
                return True
            if cand == 0 or size + _popcount(cand) < t:
                if sp == 0:
                    return False
                sp -= 1
                cand = stack_cand[sp]
                size = stack_size[sp]
                continue
            lsb = cand & -cand
            v = 0
            x = lsb
            while x > 1:
                x >>= 1
                v += 1
            cand ^= lsb
            stack_cand[sp] = cand
            stack_size[sp] = size
            sp += 1
            cand &= ~rows[v]
            size += 1

    @njit(cache=True)
    def exists_batch(rows, n: int, t: int, out) -> None:
        """out[b] = 1 iff graph b (rows[b, :n]) has an independent t-set."""
        for b in range(rows.shape[0]):
            out[b] = 1 if _exists_one(rows[b], n, t) else 0


def batch_exists(lanes_flat: list[int], count: int, n: int, t: int) -> np.ndarray:
    rows = np.array(lanes_flat, dtype=np.int64).reshape(count, n)
    out = np.empty(count, dtype=np.uint8)
    exists_batch(rows, n, t, out)
    return out
