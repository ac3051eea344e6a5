"""Words of F4^alpha x R^beta and the module operations on them.

Inside the package a word is an int holding its bit expansion: F4
coordinate ``i`` occupies bits ``2i, 2i+1`` and R coordinate ``j`` occupies
the four bits starting at ``2*alpha + 4j`` (the R code ``4b + a``).  Every
operation below is linear over the two-element field in this encoding.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from ..algebra import (
    F4_MUL,
    F4_SQUARE,
    GRAY_STAR,
    LEE_WEIGHT,
    R_MUL,
    THETA,
    V,
    eta,
    format_f4,
    format_r,
    parse_f4,
    parse_r,
)
from ..errors import ParseError
from ..skewpoly import SkewPoly, plain_mul, reduce_mod, skew_mul

__all__ = [
    "Ambient",
    "MixedWord",
    "scalar_mul",
    "skew_shift",
    "cyclic_shift",
    "polynomial_action",
    "inner_product",
    "gray_map",
    "mixed_weight",
]

_IDENT = tuple(range(16))


@dataclass(frozen=True)
class MixedWord:
    f4_block: tuple[int, ...]
    r_block: tuple[int, ...]

    @property
    def ambient(self) -> Ambient:
        return Ambient(len(self.f4_block), len(self.r_block))

    def to_bits(self) -> int:
        return self.ambient.join(self.f4_block, self.r_block)

    def __str__(self) -> str:
        f4 = " ".join(format_f4(a) for a in self.f4_block)
        r = " ".join(format_r(b) for b in self.r_block)
        return f"{f4} | {r}".strip()

    @classmethod
    def parse(cls, text: str) -> MixedWord:
        """Inverse of ``str``: F4 symbols, ``|``, then R symbols."""
        left, sep, right = text.partition("|")
        if not sep:
            raise ParseError(f"codeword line needs a '|' separator: {text!r}")
        try:
            f4 = tuple(parse_f4(t) for t in left.split())
            r = tuple(parse_r(t) for t in right.split())
        except ValueError as exc:
            raise ParseError(str(exc)) from None
        return cls(f4, r)


@dataclass(frozen=True)
class Ambient:
    alpha: int
    beta: int

    def __post_init__(self) -> None:
        if self.alpha < 0 or self.beta < 0 or self.alpha + self.beta < 1:
            raise ValueError(f"invalid ambient ({self.alpha}, {self.beta})")

    @property
    def nbits(self) -> int:
        return 2 * self.alpha + 4 * self.beta

    @property
    def length(self) -> int:
        return self.alpha + self.beta

    @property
    def gray_length(self) -> int:
        return self.alpha + 2 * self.beta

    @property
    def r_offset(self) -> int:
        return 2 * self.alpha

    @cached_property
    def f4_mask(self) -> int:
        return (1 << self.r_offset) - 1

    def split(self, x: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
        f4 = tuple((x >> (2 * i)) & 3 for i in range(self.alpha))
        off = self.r_offset
        r = tuple((x >> (off + 4 * j)) & 15 for j in range(self.beta))
        return f4, r

    def join(self, f4: Sequence[int], r: Sequence[int]) -> int:
        if len(f4) != self.alpha or len(r) != self.beta:
            raise ValueError(
                f"block lengths ({len(f4)}, {len(r)}) do not match ambient "
                f"({self.alpha}, {self.beta})"
            )
        x = 0
        for i, a in enumerate(f4):
            x |= a << (2 * i)
        off = self.r_offset
        for j, b in enumerate(r):
            x |= b << (off + 4 * j)
        return x

    def word(self, x: int) -> MixedWord:
        return MixedWord(*self.split(x))

    def bits(self, w: MixedWord) -> int:
        return self.join(w.f4_block, w.r_block)

    # -- bit-level operators ----------------------------------------------

    def map_symbols(self, x: int, f4_table: Sequence[int], r_table: Sequence[int]) -> int:
        f4, r = self.split(x)
        return self.join([f4_table[a] for a in f4], [r_table[b] for b in r])

    def scalar_bits(self, d: int, x: int) -> int:
        """d * x = (eta(d) a, d b)."""
        return self.map_symbols(x, F4_MUL[eta(d)], R_MUL[d])

    def rotate_bits(
        self,
        x: int,
        f4_table: Sequence[int] = _IDENT,
        r_table: Sequence[int] = _IDENT,
        steps: int = 1,
    ) -> int:
        """Cyclic shift of both blocks by ``steps``, mapping symbols through the tables."""
        f4, r = self.split(x)
        if self.alpha:
            s = steps % self.alpha
            f4 = f4[-s:] + f4[:-s] if s else f4
        if self.beta:
            s = steps % self.beta
            r = r[-s:] + r[:-s] if s else r
        return self.join([f4_table[a] for a in f4], [r_table[b] for b in r])

    def skew_shift_bits(self, x: int) -> int:
        """T_theta: plain shift of the F4 block, theta-twisted shift of the R block."""
        return self.rotate_bits(x, _IDENT, THETA)

    def cyclic_shift_bits(self, x: int, steps: int = 1) -> int:
        return self.rotate_bits(x, steps=steps)

    def frobenius_shift_bits(self, x: int) -> int:
        """Shift with the Frobenius twist on F4 symbols too (skew cyclic codes over F4)."""
        return self.rotate_bits(x, F4_SQUARE, THETA)

    def gray_bits(self, x: int) -> int:
        """Bits of phi(x) in F4^(alpha + 2 beta), layout (a | a+b | a)."""
        f4, r = self.split(x)
        sums = [GRAY_STAR[b][0] for b in r]
        firsts = [GRAY_STAR[b][1] for b in r]
        return Ambient(self.gray_length, 0).join(list(f4) + sums + firsts, ())

    def from_gray_bits(self, y: int) -> int:
        """Inverse of :meth:`gray_bits`: (a | p | q) -> (a | q + v(p + q))."""
        syms, _ = Ambient(self.gray_length, 0).split(y)
        a, b = self.alpha, self.beta
        sums, firsts = syms[a : a + b], syms[a + b :]
        r = [(((p ^ q) << 2) | q) for p, q in zip(sums, firsts)]
        return self.join(syms[:a], r)

    def weight(self, x: int) -> int:
        """wt_H of the F4 block plus wt_L of the R block."""
        f4, r = self.split(x)
        return sum(1 for a in f4 if a) + sum(LEE_WEIGHT[b] for b in r)

    def zero(self) -> int:
        return 0

    def all_v(self) -> int:
        """The word (0,...,0 | v,...,v)."""
        return self.join((0,) * self.alpha, (V,) * self.beta)

    def iter_all(self):
        """Every word of the ambient space (tiny ambients only)."""
        return range(1 << self.nbits)


# -- MixedWord-level operations -------------------------------------------------


def _check_pair(x: MixedWord, y: MixedWord) -> Ambient:
    amb = x.ambient
    if y.ambient != amb:
        raise ValueError(f"ambient mismatch: {amb} vs {y.ambient}")
    return amb


def scalar_mul(d: int, x: MixedWord) -> MixedWord:
    e = eta(d)
    return MixedWord(
        tuple(F4_MUL[e][a] for a in x.f4_block),
        tuple(R_MUL[d][b] for b in x.r_block),
    )


def _rot(block: tuple[int, ...]) -> tuple[int, ...]:
    return block[-1:] + block[:-1] if block else block


def skew_shift(x: MixedWord) -> MixedWord:
    return MixedWord(_rot(x.f4_block), tuple(THETA[b] for b in _rot(x.r_block)))


def cyclic_shift(x: MixedWord) -> MixedWord:
    return MixedWord(_rot(x.f4_block), _rot(x.r_block))


def polynomial_action(r: SkewPoly, c: MixedWord) -> MixedWord:
    """r(X) * (a(X), b(X)) = (eta(r) a mod X^alpha - 1, r b mod X^beta - 1)."""
    r = r.to_base("R")
    alpha, beta = len(c.f4_block), len(c.r_block)
    f4: tuple[int, ...] = ()
    rb: tuple[int, ...] = ()
    if alpha:
        eta_r = SkewPoly(tuple(eta(x) for x in r.coeffs), "R")
        prod = reduce_mod(plain_mul(eta_r, SkewPoly(c.f4_block, "R")), alpha)
        f4 = tuple(prod[i] for i in range(alpha))
    if beta:
        prod = reduce_mod(skew_mul(r, SkewPoly(c.r_block, "R")), beta)
        rb = tuple(prod[i] for i in range(beta))
    return MixedWord(f4, rb)


def inner_product(x: MixedWord, y: MixedWord) -> int:
    """v * sum(a_i d_i) + sum(b_j e_j), an element of R."""
    _check_pair(x, y)
    s = 0
    for a, d in zip(x.f4_block, y.f4_block):
        s ^= F4_MUL[a][d]
    t = 0
    for b, e in zip(x.r_block, y.r_block):
        t ^= R_MUL[b][e]
    return R_MUL[V][s] ^ t


def gray_map(x: MixedWord) -> tuple[int, ...]:
    sums = tuple(GRAY_STAR[b][0] for b in x.r_block)
    firsts = tuple(GRAY_STAR[b][1] for b in x.r_block)
    return x.f4_block + sums + firsts


def mixed_weight(x: MixedWord) -> int:
    return sum(1 for a in x.f4_block if a) + sum(LEE_WEIGHT[b] for b in x.r_block)
