from __future__ import annotations

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from f4rcodes import algebra as A
from f4rcodes.algebra import F4, V, r_elem

import oracles as O

W, W2 = int(F4.W), int(F4.W2)
V1 = r_elem(1, 1)
pairs16 = list(itertools.product(range(16), repeat=2))


def test_f4_vectors():
    assert A.f4_add(W, W) == 0
    assert A.f4_add(W, 1) == W2
    assert A.f4_add(0, W2) == W2
    assert A.f4_mul(W, W2) == 1
    assert A.f4_mul(W, W) == W2
    assert A.f4_mul(0, W) == 0


def test_f4_tables_match_polynomial_oracle():
    for x, y in itertools.product(range(4), repeat=2):
        assert A.f4_add(x, y) == O.f4_add(x, y)
        assert A.f4_mul(x, y) == O.f4_mul(x, y)
    for x in range(1, 4):
        assert A.f4_mul(x, A.f4_inv(x)) == 1
        assert A.f4_square(x) == O.f4_sq(x)
    with pytest.raises(ZeroDivisionError):
        A.f4_inv(0)


def test_r_vectors():
    assert A.r_mul(V, V) == V
    assert A.r_mul(V1, V) == 0
    assert A.r_mul(r_elem(W, 0), r_elem(0, W2)) == r_elem(0, 1)


def test_r_mul_matches_oracle_exhaustive():
    for x, y in pairs16:
        assert A.r_mul(x, y) == O.r_mul(x, y)
        assert A.r_add(x, y) == O.r_add(x, y)


def test_r_is_commutative_ring():
    for x, y in pairs16:
        assert A.r_mul(x, y) == A.r_mul(y, x)
    for x, y, z in itertools.product(range(16), repeat=3):
        assert A.r_mul(x, A.r_add(y, z)) == A.r_add(A.r_mul(x, y), A.r_mul(x, z))


def test_units_and_inverses():
    # the units are exactly the elements with both CRT components nonzero
    units = {x for x in range(16) if all(A.crt_decompose(x))}
    assert set(A.R_UNITS) == units
    assert len(units) == 9
    for x in units:
        assert A.r_mul(x, A.r_inv(x)) == 1
    assert not A.r_is_unit(V)


def test_theta_vectors():
    assert A.theta(r_elem(W, 0)) == r_elem(W2, 0)
    assert A.theta(V) == V1


def test_theta_is_involutive_automorphism():
    for x in range(16):
        assert A.theta(x) == O.r_theta(x)
        assert A.theta(A.theta(x)) == x
    for x, y in pairs16:
        assert A.theta(A.r_add(x, y)) == A.r_add(A.theta(x), A.theta(y))
        assert A.theta(A.r_mul(x, y)) == A.r_mul(A.theta(x), A.theta(y))


def test_theta_swaps_crt_components_with_frobenius():
    for x in range(16):
        p, q = A.crt_decompose(x)
        assert A.crt_decompose(A.theta(x)) == (O.f4_sq(q), O.f4_sq(p))


def test_eta():
    assert A.eta(r_elem(W, 1)) == W
    assert A.eta(V) == 0
    for x, y in pairs16:
        assert A.eta(A.r_mul(x, y)) == A.f4_mul(A.eta(x), A.eta(y))
        assert A.eta(A.r_add(x, y)) == A.f4_add(A.eta(x), A.eta(y))


def test_gray_star_vectors_and_bijection():
    assert A.gray_star(V) == (1, 0)
    assert A.gray_star(1) == (1, 1)
    assert A.gray_star(V1) == (0, 1)
    images = {A.gray_star(x) for x in range(16)}
    assert images == set(itertools.product(range(4), repeat=2))
    for x in range(16):
        assert A.gray_star(x) == O.gray_pair(x)


def test_lee_weight():
    assert A.lee_weight(0) == 0
    assert A.lee_weight(V) == 1
    assert A.lee_weight(1) == 2
    assert [A.lee_weight(x) for x in range(16)] == [O.lee(x) for x in range(16)]


def test_crt_round_trip():
    assert A.crt_decompose(1) == (1, 1)
    assert A.crt_decompose(V) == (1, 0)
    for x in range(16):
        assert A.crt_compose(*A.crt_decompose(x)) == x


def test_crt_is_ring_isomorphism():
    for x, y in pairs16:
        (p, q), (s, t) = A.crt_decompose(x), A.crt_decompose(y)
        assert A.crt_decompose(A.r_mul(x, y)) == (O.f4_mul(p, s), O.f4_mul(q, t))


@pytest.mark.parametrize("x", range(16))
def test_format_parse_r_round_trip(x):
    assert A.parse_r(A.format_r(x)) == x


def test_parse_r_forms():
    assert A.parse_r("v+w^2") == r_elem(W2, 1)
    assert A.parse_r("vw^2 + w") == r_elem(W, W2)
    assert A.parse_r("w^2v") == r_elem(0, W2)
    assert A.parse_r("0") == 0
    with pytest.raises(ValueError):
        A.parse_r("u")


@given(st.integers(0, 15), st.integers(0, 15), st.integers(0, 15))
def test_r_associative(x, y, z):
    assert A.r_mul(A.r_mul(x, y), z) == A.r_mul(x, A.r_mul(y, z))
