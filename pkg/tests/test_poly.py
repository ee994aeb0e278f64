"""Sparse exact polynomial engine and the triangle-counting polynomial."""

import os
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from asmlab import (
    ALPHA_VARIANTS,
    PRODUCTION_ALPHA_VARIANT,
    MultiPoly,
    TermCapExceeded,
    alpha_via_operator,
    alpha_via_recursion,
    binomial_in_var,
    count_triangles,
    select_operator_variants,
    summation_operator,
    vandermonde,
)
from asmlab.polynomials import TERM_CAP_ENV


def poly_of(arity, terms):
    return MultiPoly(arity, terms)


def mono(arity, exps, coef=1):
    return MultiPoly(arity, {tuple(exps): Fraction(coef)})


@st.composite
def small_polys(draw, arity=3, max_deg=3):
    n_terms = draw(st.integers(0, 5))
    terms = {}
    for _ in range(n_terms):
        exps = tuple(draw(st.integers(0, max_deg)) for _ in range(arity))
        terms[exps] = Fraction(draw(st.integers(-9, 9)), draw(st.integers(1, 4)))
    return poly_of(arity, terms)


# ---------------------------------------------------------------------------
# arithmetic and substitution
# ---------------------------------------------------------------------------


def test_ring_basics():
    x = mono(2, (1, 0))
    y = mono(2, (0, 1))
    p = (x + y) * (x - y)
    assert p == x * x - y * y
    assert p.evaluate([3, 2]) == 5


def test_zero_terms_are_dropped():
    x = mono(1, (1,))
    assert not (x - x).terms


@given(small_polys(), small_polys())
def test_addition_commutes(p, q):
    assert p + q == q + p


@given(small_polys(), small_polys())
def test_multiplication_evaluates_pointwise(p, q):
    point = [2, -1, 3]
    assert (p * q).evaluate(point) == p.evaluate(point) * q.evaluate(point)


@given(small_polys(), st.integers(-5, 5))
def test_shift_inverse_pair(p, a):
    assert p.shift(2, a).shift(2, -a) == p


@given(small_polys())
@settings(max_examples=50)
def test_forward_difference_is_shift_minus_identity(p):
    assert p.forward_difference(1) == p.shift(1, 1) - p


@given(small_polys())
@settings(max_examples=50)
def test_backward_difference_is_identity_minus_downshift(p):
    assert p.backward_difference(1) == p - p.shift(1, -1)


def test_difference_of_binomials():
    # forward difference maps C(k, 2) to C(k, 1); backward maps C(k, 1) to 1
    c2 = binomial_in_var(1, 1, 0, 2)
    c1 = binomial_in_var(1, 1, 0, 1)
    assert c2.forward_difference(1) == c1
    assert c1.backward_difference(1) == MultiPoly.constant(1, 1)


@given(small_polys())
@settings(max_examples=50)
def test_antidifference_inverts_forward_difference(p):
    assert p.antidifference(1).forward_difference(1) == p


def test_permute_and_negate():
    p = poly_of(3, {(2, 1, 0): Fraction(1)})
    q = p.permute_positions([2, 3, 1])  # variable v moves to the given slot
    assert q == poly_of(3, {(0, 2, 1): Fraction(1)})
    r = p.negate_variables()
    assert r.evaluate([1, 2, 3]) == p.evaluate([-1, -2, -3])


def test_substitute_and_specialize():
    p = poly_of(2, {(1, 1): Fraction(1)})
    assert p.substitute_value(1, 5).evaluate([0, 3]) == 15
    assert p.evaluate_int([4, 6]) == 24
    with pytest.raises((AssertionError, ArithmeticError, ValueError)):
        poly_of(1, {(1,): Fraction(1, 2)}).evaluate_int([1])


def test_term_cap_env(monkeypatch):
    monkeypatch.setenv(TERM_CAP_ENV, "3")
    dense = poly_of(1, {(0,): Fraction(1), (1,): Fraction(1)})
    with pytest.raises(TermCapExceeded):
        big = dense
        for _ in range(4):
            big = big * dense


def test_json_roundtrip_deterministic():
    p = poly_of(2, {(1, 0): Fraction(3, 2), (0, 2): Fraction(-1)})
    obj = p.to_json_obj()
    assert MultiPoly.from_json_obj(2, obj) == p
    assert obj == p.to_json_obj()  # stable ordering


# ---------------------------------------------------------------------------
# the counting polynomial
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("n", range(1, 6))
def test_alpha_matches_brute_force_on_strict_rows(n):
    from itertools import combinations

    alpha = alpha_via_recursion(n)
    for bottom in combinations(range(1, n + 3), n):
        assert alpha.evaluate_int(list(bottom)) == count_triangles(bottom)


def test_alpha_at_degenerate_point_is_zero():
    # (1,1,1) admits no strict middle row, and the polynomial agrees
    assert alpha_via_recursion(3).evaluate_int([1, 1, 1]) == 0


def test_alpha_small_values():
    alpha2 = alpha_via_recursion(2)
    assert alpha2.evaluate_int([1, 2]) == 2
    assert alpha2.evaluate_int([1, 3]) == 3  # k2 - k1 + 1


def test_summation_operator_builds_alpha():
    # alpha_{n}(k) = sum over strict interlacing rows of alpha_{n-1}
    alpha3 = alpha_via_recursion(3)
    assert summation_operator(alpha_via_recursion(2)) == alpha3


@pytest.mark.parametrize("variant", ALPHA_VARIANTS)
def test_operator_variants_defined(variant):
    poly = alpha_via_operator(2, variant)
    assert poly.arity == 2


def test_variant_selection_is_unique():
    assert select_operator_variants(4) == [PRODUCTION_ALPHA_VARIANT]


def test_production_variant_agrees_with_recursion():
    for n in range(1, 5):
        assert alpha_via_operator(n) == alpha_via_recursion(n)


def test_printed_variant_fails_at_order_two():
    # the rejected operator gives k2 - k1 - 1, which is 0 at (1, 2)
    poly = alpha_via_operator(2, "printed")
    assert poly.evaluate_int([1, 2]) == 0


def test_vandermonde_normalization():
    v = vandermonde(3)
    assert v.evaluate([1, 2, 3]) == 1
    assert v.evaluate([1, 1, 2]) == 0
