"""Arithmetic for F4 and for R = F4 + vF4 with v^2 = v.

Elements are plain integers so that every operation is a table lookup.

* F4 element codes: 0, 1, 2, 3 stand for 0, 1, w, w^2.  Bit 0 is the
  coefficient of 1 and bit 1 the coefficient of w, so field addition is XOR.
* R element codes: ``4 * b + a`` stands for ``a + v*b``.  An F4 element ``a``
  embeds in R with the same code, and R addition is again XOR.

All tables are built once at import from the defining relations
``w^2 = w + 1`` and ``v^2 = v``.
"""

from __future__ import annotations

import re
from enum import IntEnum

__all__ = [
    "F4",
    "V",
    "V1",
    "F4_ELEMENTS",
    "R_ELEMENTS",
    "R_UNITS",
    "f4_add",
    "f4_mul",
    "f4_inv",
    "f4_square",
    "r_elem",
    "r_parts",
    "r_add",
    "r_mul",
    "r_inv",
    "r_is_unit",
    "theta",
    "eta",
    "gray_star",
    "lee_weight",
    "crt_decompose",
    "crt_compose",
    "format_f4",
    "format_r",
    "parse_f4",
    "parse_r",
]


class F4(IntEnum):
    ZERO = 0
    ONE = 1
    W = 2
    W2 = 3


F4_ELEMENTS = tuple(range(4))
R_ELEMENTS = tuple(range(16))


def _poly_mul_f4(x: int, y: int) -> int:
    # carry-less product of two degree-1 polynomials in w, reduced by w^2 = w + 1
    prod = 0
    for i in range(2):
        if (y >> i) & 1:
            prod ^= x << i
    if prod & 4:
        prod ^= 0b111
    return prod


F4_MUL = tuple(tuple(_poly_mul_f4(x, y) for y in F4_ELEMENTS) for x in F4_ELEMENTS)
F4_INV = tuple(
    0 if x == 0 else next(y for y in F4_ELEMENTS if F4_MUL[x][y] == 1)
    for x in F4_ELEMENTS
)
F4_SQUARE = tuple(F4_MUL[x][x] for x in F4_ELEMENTS)


def r_elem(a: int, b: int = 0) -> int:
    """Code of ``a + v*b``."""
    return (b << 2) | a


def r_parts(x: int) -> tuple[int, int]:
    """Split an R code into ``(a, b)`` with ``x = a + v*b``."""
    return x & 3, x >> 2


V = r_elem(0, 1)
V1 = r_elem(1, 1)


def _r_mul(x: int, y: int) -> int:
    a, b = r_parts(x)
    c, d = r_parts(y)
    m = F4_MUL
    # (a + vb)(c + vd) = ac + v(ad + bc + bd)
    return r_elem(m[a][c], m[a][d] ^ m[b][c] ^ m[b][d])


def _theta(x: int) -> int:
    a, b = r_parts(x)
    # a^2 + (v + 1) b^2 = (a^2 + b^2) + v b^2
    sa, sb = F4_SQUARE[a], F4_SQUARE[b]
    return r_elem(sa ^ sb, sb)


R_MUL = tuple(tuple(_r_mul(x, y) for y in R_ELEMENTS) for x in R_ELEMENTS)
THETA = tuple(_theta(x) for x in R_ELEMENTS)
ETA = tuple(x & 3 for x in R_ELEMENTS)
R_INV = tuple(
    next((y for y in R_ELEMENTS if R_MUL[x][y] == 1), -1) for x in R_ELEMENTS
)
R_UNITS = tuple(x for x in R_ELEMENTS if R_INV[x] >= 0)
GRAY_STAR = tuple((ETA[x] ^ (x >> 2), ETA[x]) for x in R_ELEMENTS)
LEE_WEIGHT = tuple((p != 0) + (q != 0) for p, q in GRAY_STAR)


def f4_add(x: int, y: int) -> int:
    return x ^ y


def f4_mul(x: int, y: int) -> int:
    return F4_MUL[x][y]


def f4_inv(x: int) -> int:
    if x == 0:
        raise ZeroDivisionError("0 has no inverse in F4")
    return F4_INV[x]


def f4_square(x: int) -> int:
    """Frobenius map, which is also theta restricted to F4."""
    return F4_SQUARE[x]


def r_add(x: int, y: int) -> int:
    return x ^ y


def r_mul(x: int, y: int) -> int:
    return R_MUL[x][y]


def r_is_unit(x: int) -> bool:
    return R_INV[x] >= 0


def r_inv(x: int) -> int:
    inv = R_INV[x]
    if inv < 0:
        raise ZeroDivisionError(f"{format_r(x)} is a zero divisor in R")
    return inv


def theta(x: int) -> int:
    """The automorphism a + vb -> a^2 + (v+1) b^2."""
    return THETA[x]


def eta(x: int) -> int:
    """The projection a + vb -> a onto F4."""
    return x & 3


def gray_star(x: int) -> tuple[int, int]:
    """Gray image (a + b, a) of a + vb."""
    return GRAY_STAR[x]


def lee_weight(x: int) -> int:
    return LEE_WEIGHT[x]


def crt_decompose(x: int) -> tuple[int, int]:
    """Return ``(p, q)`` with ``x = p*v + q*(v+1)``."""
    a, b = r_parts(x)
    return a ^ b, a


def crt_compose(p: int, q: int) -> int:
    return r_elem(q, p ^ q)


# -- text grammar -------------------------------------------------------------

_F4_SYMBOLS = ("0", "1", "w", "w^2")
_F4_ALIASES = {"0": 0, "1": 1, "w": 2, "w^2": 3, "w2": 3, "w^1": 2, "w^0": 1, "w^3": 1}


def format_f4(x: int) -> str:
    return _F4_SYMBOLS[x]


def parse_f4(text: str) -> int:
    key = re.sub(r"\s+", "", text)
    try:
        return _F4_ALIASES[key]
    except KeyError:
        raise ValueError(f"not an F4 constant: {text!r}") from None


def format_r(x: int) -> str:
    """Render as ``a+v*b``, dropping zero parts (``v`` for ``v*1``)."""
    a, b = r_parts(x)
    if b == 0:
        return _F4_SYMBOLS[a]
    vb = "v" if b == 1 else "v*" + _F4_SYMBOLS[b]
    return vb if a == 0 else f"{_F4_SYMBOLS[a]}+{vb}"


def _parse_r_term(term: str) -> int:
    if "v" not in term:
        return parse_f4(term)
    # v, v*c, vc, c*v, cv
    rest = term.replace("v", "", 1).replace("*", "")
    if "v" in rest:
        raise ValueError(f"bad R term: {term!r}")
    return r_elem(0, 1 if rest == "" else parse_f4(rest))


def parse_r(text: str) -> int:
    """Parse an R constant such as ``w+v*w^2``, ``vw^2+1`` or ``v+1``."""
    body = re.sub(r"\s+", "", text)
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    if not body:
        raise ValueError("empty R constant")
    value = 0
    for term in body.split("+"):
        if not term:
            raise ValueError(f"bad R constant: {text!r}")
        value ^= _parse_r_term(term)
    return value
