"""Numpy implementation of the enumeration kernel (used when the extension is absent)."""

from __future__ import annotations

import numpy as np

LOW = np.uint64(0x5555555555555555)
ONE = np.uint64(1)


def _weights(block: np.ndarray) -> np.ndarray:
    return np.bitwise_count((block | (block >> ONE)) & LOW).sum(axis=1, dtype=np.int64)


def min_weight(basis: np.ndarray, table_bits: int = 12) -> tuple[int, int]:
    """Same contract as the compiled ``min_weight``, chunked over a table of low combinations."""
    basis = np.ascontiguousarray(basis, dtype=np.uint64)
    m, nw = basis.shape
    if m == 0:
        raise ValueError("empty basis")
    if m > 62:
        raise ValueError("too many rows for exhaustive enumeration")
    low = min(m, table_bits)
    table = np.zeros((1 << low, nw), dtype=np.uint64)
    for t in range(low):
        table[1 << t : 2 << t] = table[: 1 << t] ^ basis[t]
    best, best_combo = 1 << 30, 0
    high_rows = basis[low:]
    hi_word = np.zeros(nw, dtype=np.uint64)
    for h in range(1 << (m - low)):
        if h:
            # Gray step over the high rows; combos are tracked by value
            hi_word ^= high_rows[(h & -h).bit_length() - 1]
        hv = h ^ (h >> 1)
        w = _weights(table ^ hi_word)
        if hv == 0:
            w[0] = 1 << 30
        wmin = int(w.min())
        if wmin <= best:
            idx = int(np.flatnonzero(w == wmin)[0])
            combo = idx | (hv << low)
            if wmin < best or combo < best_combo:
                best, best_combo = wmin, combo
    return best, best_combo
