"""Backend selection for the enumeration kernel.

The compiled extension is used when it imports; set ``F4R_PURE_PYTHON=1`` to
force the numpy fallback.
"""

from __future__ import annotations

import os

import numpy as np

from . import _fallback

python_min_weight = _fallback.min_weight

try:
    if os.environ.get("F4R_PURE_PYTHON"):
        raise ImportError("pure-Python backend requested")
    from ._ext.kernels import min_weight as compiled_min_weight
except ImportError:
    compiled_min_weight = None

BACKEND = "compiled" if compiled_min_weight is not None else "python"


def pack_rows(rows: list[int], nbits: int) -> np.ndarray:
    """Pack int bitsets into a (len(rows), ceil(nbits/64)) uint64 array."""
    nw = max(1, (nbits + 63) // 64)
    out = np.zeros((len(rows), nw), dtype=np.uint64)
    mask = (1 << 64) - 1
    for i, r in enumerate(rows):
        for k in range(nw):
            out[i, k] = (r >> (64 * k)) & mask
    return out


def min_weight(basis: np.ndarray, backend: str | None = None) -> tuple[int, int]:
    """Dispatch to the chosen backend; see ``_fallback.min_weight`` for the contract."""
    backend = backend or BACKEND
    if backend == "compiled":
        if compiled_min_weight is None:
            raise RuntimeError("compiled kernels are not available")
        return compiled_min_weight(np.ascontiguousarray(basis, dtype=np.uint64))
    return python_min_weight(basis)
