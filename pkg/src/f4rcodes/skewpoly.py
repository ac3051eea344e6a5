"""Skew polynomials over F4 and R with the twist X*c = theta(c)*X.

Over F4, theta is the Frobenius map, so F4[X, theta] is the ring of skew
polynomials used by skew cyclic codes of even length.  The commutative ring
F4[X] (for ordinary cyclic codes) is served by :func:`plain_mul` and
:func:`plain_divmod`.
"""

from __future__ import annotations

import itertools
import logging
import re
from dataclasses import dataclass
from typing import Iterable, Iterator

from .algebra import R_INV, R_MUL, THETA, format_r, parse_r
from .errors import BudgetExceeded, ParseError, PreconditionError

__all__ = [
    "SkewPoly",
    "poly",
    "x_power_minus_one",
    "skew_mul",
    "skew_mul_mod",
    "reduce_mod",
    "right_divide",
    "left_divide",
    "is_right_divisor_of_xn_minus_1",
    "reciprocal",
    "is_self_reciprocal",
    "all_monic_right_divisors",
    "plain_mul",
    "plain_divmod",
    "parse_poly",
    "format_poly",
]

log = logging.getLogger(__name__)

BASES = ("F4", "R")
_BASE_SIZE = {"F4": 4, "R": 16}


@dataclass(frozen=True)
class SkewPoly:
    """Coefficient ``coeffs[i]`` multiplies ``X**i``; trailing zeros are stripped."""

    coeffs: tuple[int, ...] = ()
    base: str = "F4"

    def __post_init__(self) -> None:
        if self.base not in BASES:
            raise ValueError(f"unknown base ring {self.base!r}")
        cs = tuple(int(c) for c in self.coeffs)
        limit = _BASE_SIZE[self.base]
        if any(not 0 <= c < limit for c in cs):
            raise ValueError(f"coefficient out of range for {self.base}: {cs}")
        end = len(cs)
        while end and cs[end - 1] == 0:
            end -= 1
        object.__setattr__(self, "coeffs", cs[:end])

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.lead == 1

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __add__(self, other: SkewPoly) -> SkewPoly:
        _check_base(self, other)
        n = max(len(self.coeffs), len(other.coeffs))
        return SkewPoly(tuple(self[i] ^ other[i] for i in range(n)), self.base)

    __sub__ = __add__

    def __mul__(self, other: SkewPoly) -> SkewPoly:
        return skew_mul(self, other)

    def shift(self, k: int) -> SkewPoly:
        """Right multiplication by X**k (no twist on existing coefficients)."""
        if self.is_zero():
            return self
        return SkewPoly((0,) * k + self.coeffs, self.base)

    def to_base(self, base: str) -> SkewPoly:
        if base == self.base:
            return self
        if base == "F4" and any(c > 3 for c in self.coeffs):
            raise ValueError("polynomial has coefficients outside F4")
        return SkewPoly(self.coeffs, base)

    def __str__(self) -> str:
        return format_poly(self)


def poly(coeffs: Iterable[int], base: str = "F4") -> SkewPoly:
    return SkewPoly(tuple(coeffs), base)


def x_power_minus_one(n: int, base: str = "F4") -> SkewPoly:
    if n < 1:
        raise ValueError("n must be positive")
    return SkewPoly((1,) + (0,) * (n - 1) + (1,), base)


def _check_base(f: SkewPoly, g: SkewPoly) -> None:
    if f.base != g.base:
        raise ValueError(f"base ring mismatch: {f.base} vs {g.base}")


def _twist(c: int, i: int) -> int:
    return THETA[c] if i & 1 else c


def skew_mul(f: SkewPoly, g: SkewPoly) -> SkewPoly:
    """Product in the skew ring: (a X^i)(b X^j) = a theta^i(b) X^(i+j)."""
    _check_base(f, g)
    if f.is_zero() or g.is_zero():
        return SkewPoly((), f.base)
    out = [0] * (len(f.coeffs) + len(g.coeffs) - 1)
    g_odd = [THETA[b] for b in g.coeffs]
    for i, a in enumerate(f.coeffs):
        if not a:
            continue
        row = R_MUL[a]
        src = g_odd if i & 1 else g.coeffs
        for j, b in enumerate(src):
            out[i + j] ^= row[b]
    return SkewPoly(tuple(out), f.base)


def reduce_mod(f: SkewPoly, n: int) -> SkewPoly:
    """Reduce modulo the left ideal generated by X^n - 1, i.e. c X^k -> c X^(k mod n)."""
    if n < 1:
        raise ValueError("n must be positive")
    out = [0] * n
    for i, c in enumerate(f.coeffs):
        out[i % n] ^= c
    return SkewPoly(tuple(out), f.base)


def skew_mul_mod(f: SkewPoly, g: SkewPoly, n: int) -> SkewPoly:
    if n < 1:
        raise ValueError("n must be positive")
    return reduce_mod(skew_mul(f, g), n)


def _unit_inverse(c: int, what: str) -> int:
    inv = R_INV[c]
    if inv < 0:
        raise PreconditionError(f"leading coefficient of {what} is not a unit")
    return inv


def right_divide(f: SkewPoly, d: SkewPoly) -> tuple[SkewPoly, SkewPoly]:
    """Return ``(q, r)`` with ``f = q*d + r`` and ``deg r < deg d``."""
    _check_base(f, d)
    if d.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    lead_inv = _unit_inverse(d.lead, "divisor")
    lead_inv_t = THETA[lead_inv]
    dd = d.degree
    d_odd = tuple(THETA[c] for c in d.coeffs)
    rem = list(f.coeffs)
    q = [0] * max(len(rem) - dd, 0)
    for top in range(len(rem) - 1, dd - 1, -1):
        c = rem[top]
        if not c:
            continue
        k = top - dd
        # (s X^k) d has leading coefficient s theta^k(lead d)
        s = R_MUL[c][lead_inv_t if k & 1 else lead_inv]
        q[k] = s
        row = R_MUL[s]
        src = d_odd if k & 1 else d.coeffs
        for j, b in enumerate(src):
            rem[k + j] ^= row[b]
    return SkewPoly(tuple(q), f.base), SkewPoly(tuple(rem[:dd]), f.base)


def left_divide(f: SkewPoly, d: SkewPoly) -> tuple[SkewPoly, SkewPoly]:
    """Return ``(q, r)`` with ``f = d*q + r`` and ``deg r < deg d``."""
    _check_base(f, d)
    if d.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    lead_inv = _unit_inverse(d.lead, "divisor")
    dd = d.degree
    rem = list(f.coeffs)
    q = [0] * max(len(rem) - dd, 0)
    for top in range(len(rem) - 1, dd - 1, -1):
        c = rem[top]
        if not c:
            continue
        k = top - dd
        # d (s X^k) has leading coefficient lead(d) theta^dd(s)
        s = _twist(R_MUL[lead_inv][c], dd)
        q[k] = s
        for j, a in enumerate(d.coeffs):
            if a:
                rem[j + k] ^= R_MUL[a][_twist(s, j)]
    return SkewPoly(tuple(q), f.base), SkewPoly(tuple(rem[:dd]), f.base)


def is_right_divisor_of_xn_minus_1(d: SkewPoly, n: int) -> bool:
    _, r = right_divide(x_power_minus_one(n, d.base), d)
    return r.is_zero()


def reciprocal(f: SkewPoly) -> SkewPoly:
    """Coefficient reversal f0 X^k + f1 X^(k-1) + ... + fk."""
    return SkewPoly(f.coeffs[::-1], f.base)


def is_self_reciprocal(f: SkewPoly) -> bool:
    return f.coeffs == f.coeffs[::-1]


def _monics(degree: int, base: str) -> Iterator[SkewPoly]:
    values = range(_BASE_SIZE[base])
    for low in itertools.product(values, repeat=degree):
        # product varies the last slot fastest; reverse so c0 varies fastest
        yield SkewPoly(tuple(reversed(low)) + (1,), base)


def all_monic_right_divisors(
    n: int, base: str = "F4", max_degree: int = 12, budget: int = 1 << 22
) -> list[SkewPoly]:
    """All monic right divisors of X^n - 1 of degree at most ``max_degree``.

    A divisor d of degree m satisfies X^n - 1 = h d with h monic of degree
    n - m, and h determines d.  We therefore enumerate whichever of d or h has
    the smaller degree, which keeps the search at about 2 q^(n/2) candidates.
    """
    if n < 1:
        raise ValueError("n must be positive")
    q = _BASE_SIZE[base]
    top = min(max_degree, n)
    cost = sum(q ** min(m, n - m) for m in range(top + 1))
    if cost > budget:
        raise BudgetExceeded(f"divisor search needs {cost} candidates, budget is {budget}")
    target = x_power_minus_one(n, base)
    found = []
    for m in range(top + 1):
        if m <= n - m:
            for d in _monics(m, base):
                if right_divide(target, d)[1].is_zero():
                    found.append(d)
        else:
            for h in _monics(n - m, base):
                d, r = left_divide(target, h)
                if r.is_zero():
                    found.append(d)
    found.sort(key=lambda p: (p.degree, p.coeffs[::-1]))
    return found


# -- commutative F4[X] ----------------------------------------------------------


def plain_mul(f: SkewPoly, g: SkewPoly) -> SkewPoly:
    """Ordinary (untwisted) product."""
    _check_base(f, g)
    if f.is_zero() or g.is_zero():
        return SkewPoly((), f.base)
    out = [0] * (len(f.coeffs) + len(g.coeffs) - 1)
    for i, a in enumerate(f.coeffs):
        if a:
            row = R_MUL[a]
            for j, b in enumerate(g.coeffs):
                out[i + j] ^= row[b]
    return SkewPoly(tuple(out), f.base)


def plain_divmod(f: SkewPoly, d: SkewPoly) -> tuple[SkewPoly, SkewPoly]:
    _check_base(f, d)
    if d.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    lead_inv = _unit_inverse(d.lead, "divisor")
    dd = d.degree
    rem = list(f.coeffs)
    q = [0] * max(len(rem) - dd, 0)
    for top in range(len(rem) - 1, dd - 1, -1):
        c = rem[top]
        if c:
            s = R_MUL[c][lead_inv]
            q[top - dd] = s
            for j, b in enumerate(d.coeffs):
                rem[top - dd + j] ^= R_MUL[s][b]
    return SkewPoly(tuple(q), f.base), SkewPoly(tuple(rem[:dd]), f.base)


# -- text grammar -------------------------------------------------------------

_TERM = re.compile(r"^(?P<coef>\(.*\)|[^X]*?)\*?(?:X(?:\^(?P<exp>\d+))?(?P<x>))?$")


def _split_terms(body: str) -> list[str]:
    terms, depth, cur = [], 0, []
    for ch in body:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "+" and depth == 0:
            terms.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    terms.append("".join(cur))
    return terms


def parse_poly(text: str, base: str = "F4") -> SkewPoly:
    """Parse sums of ``c``, ``c*X``, ``c*X^k`` (juxtaposition and spaces allowed).

    Lowercase ``x`` is accepted and normalized to ``X`` with a logged notice;
    ``-`` is read as ``+`` since both rings have characteristic 2, and TeX
    exponent braces (``X^{10}``) are dropped.
    """
    body = re.sub(r"[\s{}]+", "", text)
    if "x" in body:
        log.info("normalized lowercase 'x' to 'X' in %r", text)
        body = body.replace("x", "X")
    body = body.replace("-", "+")
    if not body:
        raise ParseError("empty polynomial")
    coeffs: dict[int, int] = {}
    for term in _split_terms(body):
        m = _TERM.match(term)
        if not term or m is None:
            raise ParseError(f"bad polynomial term {term!r} in {text!r}")
        coef_txt = m.group("coef")
        has_x = m.group("x") is not None
        if coef_txt == "":
            if not has_x:
                raise ParseError(f"bad polynomial term {term!r}")
            c = 1
        else:
            try:
                c = parse_r(coef_txt)
            except ValueError as exc:
                raise ParseError(str(exc)) from None
        exp = int(m.group("exp")) if m.group("exp") else (1 if has_x else 0)
        coeffs[exp] = coeffs.get(exp, 0) ^ c
    size = max(coeffs) + 1
    vec = tuple(coeffs.get(i, 0) for i in range(size))
    if base == "F4" and any(c > 3 for c in vec):
        raise ParseError(f"coefficient outside F4 in {text!r}")
    return SkewPoly(vec, base)


def format_poly(f: SkewPoly) -> str:
    """Ascending-degree text form, e.g. ``w+w^2*X+X^3``."""
    if f.is_zero():
        return "0"
    parts = []
    for i, c in enumerate(f.coeffs):
        if not c:
            continue
        cs = format_r(c)
        if "+" in cs:
            cs = f"({cs})"
        if i == 0:
            parts.append(cs)
            continue
        mono = "X" if i == 1 else f"X^{i}"
        parts.append(mono if c == 1 else f"{cs}*{mono}")
    return "+".join(parts)
