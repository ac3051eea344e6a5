from __future__ import annotations

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from f4rcodes.algebra import r_elem
from f4rcodes.codes import (
    Ambient,
    Code,
    GeneratorSpec,
    MixedWord,
    Op,
    build_from_spec,
    check_equivalence_theorems,
    closure,
    component_codes,
    cyclic_code,
    direct_product,
    dual,
    dual_by_enumeration,
    gray_image,
    gray_map,
    inner_product,
    is_closed_under,
    is_self_orthogonal,
    mixed_weight,
    normalize_ell,
    polynomial_action,
    r_skew_cyclic_code,
    scalar_mul,
    skew_cyclic_code,
    skew_shift,
    verified_flags,
)
from f4rcodes.errors import ParseError, PreconditionError
from f4rcodes.skewpoly import parse_poly, poly, x_power_minus_one

import oracles as O
from instances import built_codes, plain_divisors, skew_divisors

W, W2, V = 2, 3, 4
V1 = 5
T1R1 = parse_poly("w + w^2 X + w^2 X^2 + X^3")


def words(alpha: int, beta: int):
    return st.builds(
        MixedWord,
        st.tuples(*[st.integers(0, 3)] * alpha),
        st.tuples(*[st.integers(0, 15)] * beta),
    )


def as_oracle(w: MixedWord) -> O.Word:
    return (w.f4_block, w.r_block)


def oracle_set(c: Code) -> frozenset:
    amb = c.ambient
    return frozenset(amb.split(x) for x in c.iter_bits())


# -- words -----------------------------------------------------------------------


def test_scalar_vectors():
    x = MixedWord((1,), (1,))
    assert scalar_mul(V, x) == MixedWord((0,), (V,))
    assert scalar_mul(W, x) == MixedWord((W,), (W,))
    assert scalar_mul(1, x) == x


def test_skew_shift_vectors():
    assert skew_shift(MixedWord((1, 0), (V, 0))) == MixedWord((0, 1), (0, V1))
    z = MixedWord((0,) * 3, (0,) * 2)
    assert skew_shift(z) == z


@pytest.mark.parametrize("alpha,beta", [(1, 2), (2, 2), (2, 1), (3, 2)])
def test_skew_shift_order_divides_even_lcm(alpha, beta):
    amb = Ambient(alpha, beta)
    gamma = {(1, 2): 2, (2, 2): 2, (2, 1): 2, (3, 2): 6}[(alpha, beta)]
    for x in amb.iter_all():
        y = x
        for _ in range(gamma):
            y = amb.skew_shift_bits(y)
        assert y == x


@given(words(3, 2), st.integers(0, 15))
def test_word_ops_match_oracle(x, d):
    ox = as_oracle(x)
    assert as_oracle(scalar_mul(d, x)) == O.scalar(d, ox)
    assert as_oracle(skew_shift(x)) == O.t_theta(ox)
    assert gray_map(x) == O.gray(ox)
    assert mixed_weight(x) == O.mixed_weight(ox) == sum(1 for s in gray_map(x) if s)


@given(words(2, 3), words(2, 3))
def test_inner_product_matches_oracle(x, y):
    assert inner_product(x, y) == O.inner(as_oracle(x), as_oracle(y))


def test_inner_product_vectors():
    assert inner_product(MixedWord((1,), ()), MixedWord((1,), ())) == V
    assert inner_product(MixedWord((), (V,)), MixedWord((), (V1,))) == 0
    z = MixedWord((0, 0), (0,))
    assert inner_product(z, z) == 0


def test_gray_vector():
    a, b, c = W, 1, W2
    assert gray_map(MixedWord((a,), (r_elem(b, c),))) == (a, b ^ c, b)


@given(words(3, 3))
def test_polynomial_action(c):
    assert polynomial_action(poly([0, 1], "R"), c) == skew_shift(c)
    assert polynomial_action(poly([1], "R"), c) == c
    assert polynomial_action(poly([V], "R"), c) == scalar_mul(V, c)


@given(words(2, 2))
def test_bits_round_trip(x):
    amb = x.ambient
    bits = amb.bits(x)
    assert amb.word(bits) == x
    assert amb.from_gray_bits(amb.gray_bits(bits)) == bits
    assert MixedWord.parse(str(x)) == x


def test_word_parse_errors():
    with pytest.raises(ParseError):
        MixedWord.parse("1 w v")
    with pytest.raises(ParseError):
        MixedWord.parse("1 q | v")


# -- closure ---------------------------------------------------------------------


def test_closure_of_zero():
    c = closure(Ambient(2, 2), [0])
    assert c.is_zero() and c.size == 1


def test_closure_table1_row1_over_r_block():
    amb = Ambient(0, 6)
    c = closure(amb, [amb.join((), T1R1.coeffs + (0, 0))], (Op.F4_SCALARS, Op.SKEW_SHIFT))
    assert c.size == 64


@pytest.mark.parametrize("seed", range(40))
def test_closure_matches_set_oracle(seed):
    rng = random.Random(seed)
    alpha, beta = rng.choice([(1, 1), (2, 1), (1, 2), (0, 2), (3, 0), (2, 0)])
    amb = Ambient(alpha, beta)
    gens = [rng.randrange(1 << amb.nbits) for _ in range(rng.randint(1, 2))]
    ops = rng.choice([(Op.R_SCALARS, Op.SKEW_SHIFT), (Op.R_SCALARS,), (Op.SKEW_SHIFT,)])
    maps = []
    if Op.R_SCALARS in ops:
        maps += O.r_module_maps()
    if Op.SKEW_SHIFT in ops:
        maps.append(O.t_theta)
    expected = O.set_closure([amb.split(g) for g in gens], maps, alpha, beta)
    got = closure(amb, gens, ops)
    assert oracle_set(got) == expected
    assert closure(amb, got.basis, ops).basis == got.basis


def test_code_membership_and_flags():
    c = r_skew_cyclic_code(T1R1, T1R1, 6)
    assert c.ambient.word(c.basis[0]) in c
    flags = verified_flags(c).closure_flags
    assert {"R", "T_theta", "F4"} <= flags
    assert c.f4_dimension == c.log2_size // 2


def test_iter_bits_cap():
    from f4rcodes.errors import BudgetExceeded

    with pytest.raises(BudgetExceeded):
        list(Code.full(Ambient(2, 2)).iter_bits(cap=16))


# -- construction ------------------------------------------------------------------


def test_build_rejects_bad_divisors():
    with pytest.raises(PreconditionError, match="remainder"):
        build_from_spec(GeneratorSpec(g1=parse_poly("X^2 + w X + 1")), Ambient(0, 4))
    with pytest.raises(PreconditionError):
        build_from_spec(GeneratorSpec(f=parse_poly("X^2 + X + 1")), Ambient(4, 1))


def test_g_equal_xn_minus_1_gives_f4_only_code():
    xb = x_power_minus_one(3)
    c = build_from_spec(GeneratorSpec(f=parse_poly("X + 1"), g1=xb, g2=xb), Ambient(3, 3))
    assert all(c.ambient.split(x)[1] == (0, 0, 0) for x in c.basis)
    assert c.log2_size == 4


@pytest.mark.parametrize("seed", range(30))
def test_normalize_ell_preserves_code(seed):
    rng = random.Random(seed)
    alpha, beta = rng.choice([(2, 2), (3, 1), (4, 2), (3, 3)])
    f = rng.choice(plain_divisors(alpha)[1:])
    ell = poly([rng.randrange(4) for _ in range(f.degree + rng.randint(1, 3))])
    g = rng.choice(skew_divisors(beta))
    spec = GeneratorSpec(f=f, ell=ell, g1=g, g2=rng.choice(skew_divisors(beta)))
    norm = normalize_ell(spec)
    assert norm.ell.degree < f.degree
    amb = Ambient(alpha, beta)
    assert build_from_spec(spec, amb).basis == build_from_spec(norm, amb).basis


def test_ell_multiple_of_f_cancels():
    f = parse_poly("X + 1")
    spec = GeneratorSpec(f=f, ell=parse_poly("X^3 + X^2"))
    assert normalize_ell(spec).ell.is_zero()
    short = GeneratorSpec(f=parse_poly("X^2 + X + 1"), ell=parse_poly("w"))
    assert normalize_ell(short) == short


def test_trivial_f_gives_r_only_product():
    alpha, beta = 3, 3
    g = skew_divisors(beta)[1]
    c = build_from_spec(GeneratorSpec(f=x_power_minus_one(alpha), g1=g, g2=g), Ambient(alpha, beta))
    r_only = r_skew_cyclic_code(g, g, beta)
    assert c.log2_size == r_only.log2_size
    assert all(c.ambient.split(x)[0] == (0, 0, 0) for x in c.basis)


def test_equal_generators_give_equal_components():
    c = r_skew_cyclic_code(T1R1, T1R1, 6)
    _, c1, c2 = component_codes(c)
    ref = skew_cyclic_code(T1R1, 6)
    assert c1.basis == c2.basis == ref.basis


def test_cyclic_and_skew_codes():
    c = cyclic_code(parse_poly("X^3+X^2+X+1"), 4)
    assert c.log2_size == 2 and is_closed_under(c, Op.CYCLIC_SHIFT)
    s = skew_cyclic_code(T1R1, 6)
    assert s.log2_size == 6 and is_closed_under(s, Op.FROBENIUS_SHIFT)
    with pytest.raises(PreconditionError):
        cyclic_code(parse_poly("X^2+1"), 3)


# -- dual and orthogonality -------------------------------------------------------


def test_dual_trivial_cases():
    amb = Ambient(2, 1)
    assert dual(Code.zero(amb)).basis == Code.full(amb).basis
    assert dual(Code.full(amb)).is_zero()
    assert is_self_orthogonal(Code.zero(amb))
    assert not is_self_orthogonal(Code.full(amb))


@pytest.mark.parametrize("seed", range(12))
def test_dual_matches_pure_oracle(seed):
    rng = random.Random(seed)
    alpha, beta = rng.choice([(1, 1), (2, 1), (1, 2), (3, 1), (0, 3)])
    amb = Ambient(alpha, beta)
    c = closure(amb, [rng.randrange(1 << amb.nbits)])
    expected = O.dual_brute([amb.split(x) for x in c.basis], alpha, beta)
    assert oracle_set(dual(c)) == expected


def test_dual_by_enumeration_agrees():
    for _, c in built_codes(20, seed=5, max_bits=16):
        assert dual(c).basis == dual_by_enumeration(c).basis


# -- Gray image and components ----------------------------------------------------


def test_gray_image_of_zero():
    assert gray_image(Code.zero(Ambient(2, 2))).is_zero()


def test_component_codes_of_zero():
    comps = component_codes(Code.zero(Ambient(2, 2)))
    assert all(c.is_zero() for c in comps)


def test_components_of_skew_cyclic_code():
    for _, c in built_codes(30, seed=3, max_bits=20, shape=lambda a, b: a > 0):
        c0 = component_codes(c)[0]
        assert is_closed_under(c0, Op.CYCLIC_SHIFT)


def test_direct_product_distance_ignores_zero_component():
    from f4rcodes.codes import min_distance

    c0 = cyclic_code(parse_poly("X^3+X^2+X+1"), 4)
    z = Code.zero(Ambient(6, 0))
    prod = direct_product(c0, z, z)
    assert min_distance(prod).value == min_distance(c0).value == 4


def test_direct_product_rejects_mixed_codes():
    with pytest.raises(PreconditionError):
        direct_product(Code.zero(Ambient(1, 1)), Code.zero(Ambient(1, 0)), Code.zero(Ambient(1, 0)))


# -- structural theorems on small fixed instances -----------------------------------


def test_equivalence_odd_and_even():
    for _, c in built_codes(20, seed=7, shape=lambda a, b: (a, b) == (3, 3)):
        assert check_equivalence_theorems(c)["plain_cyclic_closure"]["holds"]
    for _, c in built_codes(20, seed=8, shape=lambda a, b: (a, b) == (2, 2)):
        assert check_equivalence_theorems(c)["index2_quasi_cyclic_closure"]["holds"]
    z = check_equivalence_theorems(Code.zero(Ambient(3, 3)))
    assert z["passed"]


def test_dual_of_zero_is_skew_cyclic():
    assert is_closed_under(dual(Code.zero(Ambient(2, 2))), Op.SKEW_SHIFT)


def test_odd_beta_dual_survey():
    """Odd beta is outside the theorem's hypothesis; record what happens."""
    results = [
        is_closed_under(dual(c), Op.SKEW_SHIFT)
        for _, c in built_codes(60, seed=11, max_bits=20, shape=lambda a, b: b % 2 == 1)
    ]
    print(f"odd beta: dual skew cyclic in {sum(results)}/{len(results)} instances")


def test_double_dual_contains_code_and_size_survey():
    equal = size_identity = total = 0
    for _, c in built_codes(150, seed=12, max_bits=20):
        d = dual(c)
        dd = dual(d)
        assert all(dd.contains_bits(x) for x in c.basis)
        total += 1
        equal += dd.basis == c.basis
        size_identity += c.log2_size + d.log2_size == c.ambient.nbits
    print(f"dual(dual(C)) == C in {equal}/{total}; |C||C-perp| = |ambient| in {size_identity}/{total}")


def test_components_are_frobenius_shifts_of_each_other():
    # theta swaps the CRT components, so T_theta-closure ties C1 to T_frob(C2)
    not_skew = 0
    for _, c in built_codes(200, seed=21, shape=lambda a, b: a == 0 and b >= 2):
        _, c1, c2 = component_codes(c)
        amb = c1.ambient
        shifted = Code.from_rows(amb, [amb.frobenius_shift_bits(x) for x in c2.basis])
        assert shifted.basis == c1.basis
        not_skew += not is_closed_under(c1, Op.FROBENIUS_SHIFT)
    print(f"components not F4-skew cyclic in {not_skew}/200 R-skew cyclic codes")


def test_r_skew_code_with_non_skew_components():
    c = r_skew_cyclic_code(poly([1]), x_power_minus_one(2), 2)  # generated by g = v
    _, c1, c2 = component_codes(c)
    assert is_closed_under(c, Op.SKEW_SHIFT)
    assert c1.basis == (1, 2) and c2.basis == (4, 8)
    assert not is_closed_under(c1, Op.FROBENIUS_SHIFT)
