"""Duals, orthogonality, Gray images, product structure and the shift theorems."""

from __future__ import annotations

import numpy as np

from ..algebra import F4_MUL, R_MUL, V
from ..errors import BudgetExceeded, PreconditionError, VerificationError
from ..linear import kernel
from .code import Code, Op, is_closed_under, verified_flags
from .distance import gray_image
from .words import Ambient

__all__ = [
    "dual",
    "dual_by_enumeration",
    "is_self_orthogonal",
    "is_euclidean_self_orthogonal",
    "gray_image",
    "direct_product",
    "component_codes",
    "check_equivalence_theorems",
    "is_dual_skew_cyclic",
    "inner_bits",
]

DUAL_MAX_BITS = 4096


def inner_bits(amb: Ambient, x: int, y: int) -> int:
    """<x, y> for bit-encoded words."""
    xf, xr = amb.split(x)
    yf, yr = amb.split(y)
    s = 0
    for a, d in zip(xf, yf):
        s ^= F4_MUL[a][d]
    t = 0
    for b, e in zip(xr, yr):
        t ^= R_MUL[b][e]
    return R_MUL[V][s] ^ t


def _functional_images(amb: Ambient, rows: tuple[int, ...]) -> list[int]:
    """images[t] packs the 4-bit values <row_i, e_t> for every unit word e_t."""
    split_rows = [amb.split(x) for x in rows]
    images = []
    for t in range(amb.nbits):
        img = 0
        if t < amb.r_offset:
            pos, val = divmod(t, 2)
            unit = 1 << val
            for i, (f4, _) in enumerate(split_rows):
                img |= R_MUL[V][F4_MUL[f4[pos]][unit]] << (4 * i)
        else:
            pos, val = divmod(t - amb.r_offset, 4)
            unit = 1 << val
            for i, (_, r) in enumerate(split_rows):
                img |= R_MUL[r[pos]][unit] << (4 * i)
        images.append(img)
    return images


def dual(c: Code) -> Code:
    """C-perp from the kernel of y -> (<x_i, y>)_i over a spanning set x_i."""
    amb = c.ambient
    if amb.nbits > DUAL_MAX_BITS:
        raise BudgetExceeded(f"dual of a {amb.nbits}-bit ambient exceeds the budget")
    if c.is_zero():
        return Code.full(amb)
    rows = kernel(_functional_images(amb, c.basis))
    d = Code.from_rows(amb, rows)
    d = verified_flags(d, [Op.R_SCALARS, Op.SKEW_SHIFT, Op.CYCLIC_SHIFT])
    if str(Op.R_SCALARS) not in d.closure_flags:
        raise VerificationError("dual code is not R-linear")
    return d


def _symbol_arrays(amb: Ambient, words: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    f4 = np.stack([(words >> (2 * i)) & 3 for i in range(amb.alpha)], axis=1) if amb.alpha else None
    off = amb.r_offset
    r = np.stack([(words >> (off + 4 * j)) & 15 for j in range(amb.beta)], axis=1) if amb.beta else None
    return f4, r


def dual_by_enumeration(c: Code, max_bits: int = 22) -> Code:
    """Oracle: filter every ambient word by orthogonality to the basis."""
    amb = c.ambient
    if amb.nbits > max_bits:
        raise BudgetExceeded(f"ambient of {amb.nbits} bits is too large to enumerate")
    words = np.arange(1 << amb.nbits, dtype=np.int64)
    yf, yr = _symbol_arrays(amb, words)
    f4mul = np.array(F4_MUL, dtype=np.int64)
    rmul = np.array(R_MUL, dtype=np.int64)
    keep = np.ones(words.shape, dtype=bool)
    for x in c.basis:
        xf, xr = amb.split(x)
        s = np.zeros(words.shape, dtype=np.int64)
        for i, a in enumerate(xf):
            s ^= f4mul[a][yf[:, i]]
        t = np.zeros(words.shape, dtype=np.int64)
        for j, b in enumerate(xr):
            t ^= rmul[b][yr[:, j]]
        keep &= (rmul[V][s] ^ t) == 0
    survivors = words[keep].tolist()
    d = Code.from_rows(amb, survivors)
    if d.size != len(survivors):
        raise VerificationError("orthogonal set is not closed under addition")
    return d


def is_self_orthogonal(c: Code) -> bool:
    amb = c.ambient
    rows = c.basis
    return all(inner_bits(amb, x, y) == 0 for i, x in enumerate(rows) for y in rows[i:])


def is_euclidean_self_orthogonal(c: Code) -> bool:
    """Euclidean self-orthogonality of an F4 code (beta = 0)."""
    if c.ambient.beta:
        raise PreconditionError("Euclidean orthogonality is defined for F4 codes only")
    n = c.ambient.alpha
    rows = [c.ambient.split(x)[0] for x in c.basis]
    for i, x in enumerate(rows):
        for y in rows[i:]:
            s = 0
            for k in range(n):
                s ^= F4_MUL[x[k]][y[k]]
            if s:
                return False
    return True


def direct_product(c0: Code, c1: Code, c2: Code) -> Code:
    """All concatenations (u, v, w) with u in C0, v in C1, w in C2 (F4 codes)."""
    for c in (c0, c1, c2):
        if c.ambient.beta:
            raise PreconditionError("direct_product expects F4 codes (beta = 0)")
    a0, a1, a2 = c0.ambient.alpha, c1.ambient.alpha, c2.ambient.alpha
    rows = list(c0.basis)
    rows += [x << (2 * a0) for x in c1.basis]
    rows += [x << (2 * (a0 + a1)) for x in c2.basis]
    return Code.from_rows(Ambient(a0 + a1 + a2, 0), rows)


def component_codes(c: Code) -> tuple[Code, Code, Code]:
    """(C0, C1, C2): F4-block projections, CRT sum components a+b, CRT components a."""
    amb = c.ambient
    alpha, beta = amb.alpha, amb.beta
    rows0, rows1, rows2 = [], [], []
    for x in c.basis:
        g = amb.gray_bits(x)
        rows0.append(g & ((1 << (2 * alpha)) - 1))
        rows1.append((g >> (2 * alpha)) & ((1 << (2 * beta)) - 1))
        rows2.append(g >> (2 * (alpha + beta)))
    out = []
    for n, rows in ((alpha, rows0), (beta, rows1), (beta, rows2)):
        if n == 0:
            out.append(None)
            continue
        code = Code.from_rows(Ambient(n, 0), rows)
        out.append(verified_flags(code, [Op.F4_SCALARS, Op.CYCLIC_SHIFT, Op.FROBENIUS_SHIFT]))
    return tuple(out)


def check_equivalence_theorems(c: Code) -> dict:
    """Shift closures behind the odd/odd cyclic and even/even quasi-cyclic equivalences."""
    alpha, beta = c.ambient.alpha, c.ambient.beta
    odd = alpha % 2 == 1 and beta % 2 == 1
    even = alpha % 2 == 0 and beta % 2 == 0
    plain = is_closed_under(c, Op.CYCLIC_SHIFT)
    double = is_closed_under(c, Op.DOUBLE_SHIFT)
    return {
        "plain_cyclic_closure": {"applies": odd, "holds": plain},
        "index2_quasi_cyclic_closure": {"applies": even, "holds": double},
        "passed": (plain or not odd) and (double or not even),
    }


def is_dual_skew_cyclic(c: Code) -> bool:
    return is_closed_under(dual(c), Op.SKEW_SHIFT)
