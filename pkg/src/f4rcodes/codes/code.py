"""Codes as GF(2)-spans, and the closure engine that builds them."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Iterable, Iterator

from ..algebra import R_ELEMENTS, V
from ..errors import BudgetExceeded
from ..linear import Echelon, rref
from .words import Ambient, MixedWord

__all__ = ["Op", "Code", "closure", "is_closed_under", "verified_flags", "DEFAULT_ENUM_CAP"]

DEFAULT_ENUM_CAP = 1 << 24

W = 2


class Op(str, Enum):
    R_SCALARS = "R"
    F4_SCALARS = "F4"
    SKEW_SHIFT = "T_theta"
    CYCLIC_SHIFT = "T"
    FROBENIUS_SHIFT = "T_frob"
    DOUBLE_SHIFT = "T2"

    def __str__(self) -> str:
        return self.value


def _generators(amb: Ambient, op: Op) -> list[Callable[[int], int]]:
    """Maps whose closure is closure under ``op`` (given additive closure)."""
    if op is Op.R_SCALARS:
        # w and v generate R as an algebra over the two-element field
        return [lambda x: amb.scalar_bits(W, x), lambda x: amb.scalar_bits(V, x)]
    if op is Op.F4_SCALARS:
        return [lambda x: amb.scalar_bits(W, x)]
    if op is Op.SKEW_SHIFT:
        return [amb.skew_shift_bits]
    if op is Op.CYCLIC_SHIFT:
        return [amb.cyclic_shift_bits]
    if op is Op.FROBENIUS_SHIFT:
        return [amb.frobenius_shift_bits]
    if op is Op.DOUBLE_SHIFT:
        return [lambda x: amb.cyclic_shift_bits(x, 2)]
    raise ValueError(op)


def _checkers(amb: Ambient, op: Op) -> list[Callable[[int], int]]:
    """Every map a closed code must be stable under (all 16 scalars for R)."""
    if op is Op.R_SCALARS:
        return [lambda x, d=d: amb.scalar_bits(d, x) for d in R_ELEMENTS]
    if op is Op.F4_SCALARS:
        return [lambda x, d=d: amb.scalar_bits(d, x) for d in range(4)]
    return _generators(amb, op)


@dataclass(frozen=True)
class Code:
    """A set of words spanned over the two-element field by ``basis`` (canonical RREF)."""

    ambient: Ambient
    basis: tuple[int, ...] = ()
    closure_flags: frozenset[str] = field(default=frozenset(), compare=False)

    @classmethod
    def from_rows(
        cls, ambient: Ambient, rows: Iterable[int], flags: Iterable[str] = ()
    ) -> Code:
        return cls(ambient, rref(rows), frozenset(str(f) for f in flags))

    @classmethod
    def zero(cls, ambient: Ambient) -> Code:
        return cls(ambient, (), frozenset(op.value for op in Op))

    @classmethod
    def full(cls, ambient: Ambient) -> Code:
        rows = [1 << t for t in range(ambient.nbits)]
        return cls(ambient, tuple(rows), frozenset(op.value for op in Op))

    @property
    def log2_size(self) -> int:
        return len(self.basis)

    @property
    def size(self) -> int:
        return 1 << len(self.basis)

    @property
    def f4_dimension(self) -> int | None:
        """log2|C| / 2 when integral; None flags a non-free code."""
        return self.log2_size // 2 if self.log2_size % 2 == 0 else None

    def contains_bits(self, x: int) -> bool:
        return x in Echelon(self.basis)

    def __contains__(self, w: MixedWord | int) -> bool:
        x = w if isinstance(w, int) else self.ambient.bits(w)
        return self.contains_bits(x)

    def is_zero(self) -> bool:
        return not self.basis

    def iter_bits(self, cap: int = DEFAULT_ENUM_CAP) -> Iterator[int]:
        """All codewords in Gray-code order, starting from zero."""
        if self.size > cap:
            raise BudgetExceeded(f"code has 2^{self.log2_size} words, cap is {cap}")
        basis = self.basis
        cur = 0
        yield cur
        for i in range(1, self.size):
            cur ^= basis[(i & -i).bit_length() - 1]
            yield cur

    def codewords(self, cap: int = DEFAULT_ENUM_CAP) -> Iterator[MixedWord]:
        for x in self.iter_bits(cap):
            yield self.ambient.word(x)

    def with_flags(self, flags: Iterable[str]) -> Code:
        return Code(self.ambient, self.basis, frozenset(str(f) for f in flags))


def closure(
    ambient: Ambient,
    generators: Iterable[int | MixedWord],
    operators: Iterable[Op | str] = (Op.R_SCALARS, Op.SKEW_SHIFT),
    max_log2_size: int | None = None,
) -> Code:
    """Smallest additive group containing ``generators`` and stable under ``operators``."""
    ops = [Op(o) for o in operators]
    maps = [m for op in ops for m in _generators(ambient, op)]
    ech = Echelon()
    queue = []
    for g in generators:
        x = g if isinstance(g, int) else ambient.bits(g)
        r = ech.add(x)
        if r:
            queue.append(r)
    while queue:
        x = queue.pop()
        for m in maps:
            r = ech.add(m(x))
            if r:
                if max_log2_size is not None and len(ech) > max_log2_size:
                    raise BudgetExceeded(f"closure exceeds 2^{max_log2_size} words")
                queue.append(r)
    return Code(ambient, ech.basis(), frozenset(op.value for op in ops))


def is_closed_under(code: Code, op: Op | str) -> bool:
    ech = Echelon(code.basis)
    return all(m(x) in ech for m in _checkers(code.ambient, Op(op)) for x in code.basis)


def verified_flags(code: Code, ops: Iterable[Op | str] = tuple(Op)) -> Code:
    """Return ``code`` with closure_flags recomputed by direct verification."""
    return code.with_flags(Op(o).value for o in ops if is_closed_under(code, o))
