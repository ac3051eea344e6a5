"""Codes from generator polynomials."""

from __future__ import annotations

from dataclasses import dataclass, replace

from ..algebra import r_elem
from ..errors import PreconditionError
from ..skewpoly import (
    SkewPoly,
    format_poly,
    plain_divmod,
    reduce_mod,
    right_divide,
    x_power_minus_one,
)
from .code import Code, Op, closure
from .words import Ambient

__all__ = [
    "GeneratorSpec",
    "combine_g",
    "build_from_spec",
    "normalize_ell",
    "cyclic_code",
    "skew_cyclic_code",
    "r_skew_cyclic_code",
    "check_spec",
]

ZERO = SkewPoly((), "F4")


@dataclass(frozen=True)
class GeneratorSpec:
    """Generators (f, 0) and (ell, v g1 + (v+1) g2); a zero f contributes nothing."""

    f: SkewPoly = ZERO
    ell: SkewPoly = ZERO
    g1: SkewPoly = ZERO
    g2: SkewPoly = ZERO


def combine_g(g1: SkewPoly, g2: SkewPoly) -> SkewPoly:
    """g = v g1 + (v+1) g2, i.e. coefficient a + vb with a = g2_i, b = g1_i + g2_i."""
    n = max(len(g1.coeffs), len(g2.coeffs))
    return SkewPoly(tuple(r_elem(g2[i], g1[i] ^ g2[i]) for i in range(n)), "R")


def _word(p: SkewPoly, n: int) -> tuple[int, ...]:
    red = reduce_mod(p, n)
    return tuple(red[i] for i in range(n))


def _remainder_text(r: SkewPoly) -> str:
    return format_poly(r)


def check_spec(spec: GeneratorSpec, ambient: Ambient) -> None:
    """Raise PreconditionError unless f | X^alpha - 1 and g1, g2 right-divide X^beta - 1."""
    if ambient.alpha and not spec.f.is_zero():
        _, r = plain_divmod(x_power_minus_one(ambient.alpha), spec.f.to_base("F4"))
        if not r.is_zero():
            raise PreconditionError(
                f"f does not divide X^{ambient.alpha}-1 (remainder {_remainder_text(r)})"
            )
    if ambient.beta:
        for name, g in (("g1", spec.g1), ("g2", spec.g2)):
            if g.is_zero():
                continue
            _, r = right_divide(x_power_minus_one(ambient.beta), g.to_base("F4"))
            if not r.is_zero():
                raise PreconditionError(
                    f"{name} does not right-divide X^{ambient.beta}-1 "
                    f"(remainder {_remainder_text(r)})"
                )


def normalize_ell(spec: GeneratorSpec) -> GeneratorSpec:
    """Cancel leading terms of ell with s X^k f until deg ell < deg f."""
    f, ell = spec.f, spec.ell
    if f.is_zero():
        raise PreconditionError("normalize_ell needs a nonzero f")
    if ell.degree < f.degree:
        return spec
    _, rem = plain_divmod(ell.to_base("F4"), f.to_base("F4"))
    return replace(spec, ell=rem)


def build_from_spec(spec: GeneratorSpec, ambient: Ambient) -> Code:
    """Closure of (f, 0) and (ell, g) under R-scalars and T_theta."""
    check_spec(spec, ambient)
    if not spec.f.is_zero() and spec.ell.degree >= spec.f.degree:
        spec = normalize_ell(spec)
    alpha, beta = ambient.alpha, ambient.beta
    gens = []
    zero_r = (0,) * beta
    if alpha and not spec.f.is_zero():
        gens.append(ambient.join(_word(spec.f, alpha), zero_r))
    g = combine_g(spec.g1, spec.g2)
    f4_part = _word(spec.ell, alpha) if alpha else ()
    r_part = _word(g, beta) if beta else ()
    gens.append(ambient.join(f4_part, r_part))
    return closure(ambient, gens, (Op.R_SCALARS, Op.SKEW_SHIFT))


def cyclic_code(g: SkewPoly, n: int) -> Code:
    """The F4-cyclic code <g> in F4[X]/(X^n - 1)."""
    g = g.to_base("F4")
    _, r = plain_divmod(x_power_minus_one(n), g)
    if not r.is_zero():
        raise PreconditionError(f"g does not divide X^{n}-1 (remainder {format_poly(r)})")
    amb = Ambient(n, 0)
    return closure(amb, [amb.join(_word(g, n), ())], (Op.F4_SCALARS, Op.CYCLIC_SHIFT))


def skew_cyclic_code(g: SkewPoly, n: int) -> Code:
    """The F4-skew cyclic code {q g} in F4[X, theta]/(X^n - 1), stored with alpha = n."""
    g = g.to_base("F4")
    _, r = right_divide(x_power_minus_one(n), g)
    if not r.is_zero():
        raise PreconditionError(
            f"g does not right-divide X^{n}-1 (remainder {format_poly(r)})"
        )
    amb = Ambient(n, 0)
    return closure(amb, [amb.join(_word(g, n), ())], (Op.F4_SCALARS, Op.FROBENIUS_SHIFT))


def r_skew_cyclic_code(g1: SkewPoly, g2: SkewPoly, beta: int) -> Code:
    """R-skew cyclic code <v g1 + (v+1) g2> of length beta (alpha = 0)."""
    spec = GeneratorSpec(g1=g1, g2=g2)
    return build_from_spec(spec, Ambient(0, beta))


