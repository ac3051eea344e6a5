"""Minimum distance: exact enumeration under a cap, randomized upper bounds above it."""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

from .. import kernels
from ..algebra import F4_INV, F4_MUL
from ..errors import PreconditionError, VerificationError
from .code import DEFAULT_ENUM_CAP, Code, Op, is_closed_under
from .words import Ambient

__all__ = ["DistanceResult", "min_distance", "enum_cap", "gray_image"]

_MUL = np.array(F4_MUL, dtype=np.uint8)
_INV = np.array(F4_INV, dtype=np.uint8)


def enum_cap(default: int = DEFAULT_ENUM_CAP) -> int:
    """Enumeration cap, overridable through ``F4R_ENUM_CAP``."""
    env = os.environ.get("F4R_ENUM_CAP")
    return int(env) if env else default


@dataclass(frozen=True)
class DistanceResult:
    value: int
    exact: bool
    witness: int
    method: str

    def as_dict(self, ambient: Ambient) -> dict:
        return {
            "value": self.value,
            "exact": self.exact,
            "method": self.method,
            "witness": format(self.witness, "x"),
        }


def gray_image(c: Code) -> Code:
    """phi(C) as an F4 code of length alpha + 2 beta."""
    amb = c.ambient
    img = Code.from_rows(Ambient(amb.gray_length, 0), [amb.gray_bits(x) for x in c.basis])
    flags = [Op.F4_SCALARS] if is_closed_under(img, Op.F4_SCALARS) else []
    return img.with_flags(flags)


def _symbols(rows: list[int], n: int) -> np.ndarray:
    out = np.zeros((len(rows), n), dtype=np.uint8)
    for i, r in enumerate(rows):
        for s in range(n):
            out[i, s] = (r >> (2 * s)) & 3
    return out


def _pack(vec: np.ndarray) -> int:
    x = 0
    for s, a in enumerate(vec.tolist()):
        x |= a << (2 * s)
    return x


def _f4_systematic(G: np.ndarray, cols: np.ndarray) -> np.ndarray:
    """Row-reduce over F4, taking pivots in the column order ``cols``."""
    G = G.copy()
    r = 0
    k = G.shape[0]
    for c in cols:
        if r == k:
            break
        nz = np.flatnonzero(G[r:, c])
        if nz.size == 0:
            continue
        p = r + int(nz[0])
        if p != r:
            G[[r, p]] = G[[p, r]]
        G[r] = _MUL[_INV[G[r, c]], G[r]]
        col = G[:, c].copy()
        col[r] = 0
        mask = col != 0
        if mask.any():
            G[mask] ^= _MUL[col[mask][:, None], G[r][None, :]]
        r += 1
    return G[:r]


def _best_row(cands: np.ndarray) -> tuple[int, np.ndarray]:
    w = np.count_nonzero(cands, axis=-1)
    i = int(np.argmin(w))
    return int(w[i]), cands[i]


def _information_set_search(
    rows: list[int], n: int, rng: np.random.Generator, iterations: int, target: int
) -> tuple[int, int]:
    """Lee-Brickell search with up to two rows per combination (F4-linear codes)."""
    G = _f4_systematic(_symbols(rows, n), np.arange(n))
    k = G.shape[0]
    best, best_vec = 1 << 30, None
    for _ in range(iterations):
        perm = rng.permutation(n)
        S = _f4_systematic(G, perm)
        w, vec = _best_row(S)
        if w < best:
            best, best_vec = w, vec
        if k > 1:
            wts = []
            for lam in (1, 2, 3):
                pair = S[:, None, :] ^ _MUL[lam][S][None, :, :]
                pw = np.count_nonzero(pair, axis=2)
                np.fill_diagonal(pw, 1 << 30)
                flat = int(np.argmin(pw))
                wts.append((int(pw.flat[flat]), lam, divmod(flat, k)))
            pw, lam, (i, j) = min(wts)
            if pw < best:
                best, best_vec = pw, S[i] ^ _MUL[lam][S[j]]
        if best <= target:
            break
    return best, _pack(best_vec)


def _uniform_samples(
    packed: np.ndarray, rng: np.random.Generator, samples: int
) -> tuple[int, np.ndarray]:
    m, nw = packed.shape
    picks = rng.integers(0, 2, size=(samples, m), dtype=np.uint8)
    words = np.zeros((samples, nw), dtype=np.uint64)
    for t in range(m):
        words[picks[:, t] == 1] ^= packed[t]
    low = np.uint64(0x5555555555555555)
    w = np.bitwise_count((words | (words >> np.uint64(1))) & low).sum(axis=1)
    w[w == 0] = 1 << 30
    i = int(np.argmin(w))
    return int(w[i]), picks[i]


def min_distance(
    c: Code,
    metric: str = "gray",
    cap: int | None = None,
    seed: int = 0,
    samples: int = 4096,
    iterations: int = 300,
    target: int = 0,
    backend: str | None = None,
) -> DistanceResult:
    """Minimum nonzero weight of ``c``.

    ``metric="gray"`` measures the Hamming weight of Gray images (via the
    enumeration kernel); ``metric="mixed"`` sums wt_H on the F4 block and
    wt_L on the R block directly in Python.  Codes larger than ``cap`` get an
    upper bound (``exact=False``); ``target`` lets the randomized search stop
    once a word of at most that weight is found.
    """
    if c.is_zero():
        raise PreconditionError("the zero code has no nonzero codeword")
    cap = enum_cap() if cap is None else cap
    amb = c.ambient
    if metric == "mixed":
        best, wit = 1 << 30, 0
        for x in c.iter_bits(cap):
            if x:
                w = amb.weight(x)
                if w < best:
                    best, wit = w, x
        return DistanceResult(best, True, wit, "enumeration")
    if metric != "gray":
        raise ValueError(f"unknown metric {metric!r}")

    gray_rows = [amb.gray_bits(x) for x in c.basis]
    n = amb.gray_length
    packed = kernels.pack_rows(gray_rows, 2 * n)
    if c.size <= cap:
        w, combo = kernels.min_weight(packed, backend)
        wit = 0
        for t in range(c.log2_size):
            if (combo >> t) & 1:
                wit ^= c.basis[t]
        return DistanceResult(w, True, wit, "enumeration")

    rng = np.random.default_rng(seed)
    best, picks = _uniform_samples(packed, rng, samples)
    wit = 0
    for t in range(c.log2_size):
        if picks[t]:
            wit ^= c.basis[t]
    method = "sampling"
    for x in c.basis:
        w = amb.weight(x)
        if w < best:
            best, wit = w, x
    img = Code(Ambient(n, 0), tuple(gray_rows))
    if best > target and is_closed_under(img, Op.F4_SCALARS):
        w, gray_vec = _information_set_search(
            list(img.basis), n, rng, iterations, target
        )
        if w < best:
            best, wit, method = w, amb.from_gray_bits(gray_vec), "information-set"
    if amb.weight(wit) != best or not c.contains_bits(wit):
        raise VerificationError("distance witness failed verification")
    return DistanceResult(best, False, wit, method)
