from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hodgepink.errors import InputError, NonzeroConstantTerm, NotAUnit
from hodgepink.series import TruncatedLaurent as T, laurent_arith, log_one_minus


def test_telescoping_product():
    a = T({0: 1, 1: -1})
    b = T({0: 1, 1: 1, 2: 1}, 3)
    assert laurent_arith(a, b, "mul") == T({0: 1}, 3)


def test_invert_unit_geometric():
    assert laurent_arith(T({0: 1, 1: -1}), None, "invert_unit", prec=3) == \
        T({0: 1, 1: 1, 2: 1}, 3)


def test_frobenius_doubles_exponents():
    s = T({1: 1, 2: 1}, None, "u")
    assert laurent_arith(s, None, "frobenius_substitute", p=2) == \
        T({2: 1, 4: 1}, None, "u")
    inexact = T({1: 1}, 5, "u").frobenius(3)
    assert inexact.prec == 15


def test_frobenius_needs_u():
    with pytest.raises(InputError):
        laurent_arith(T({1: 1}), None, "frobenius_substitute", p=2)


def test_invert_nonunit():
    with pytest.raises(NotAUnit):
        T({}, 4).inverse()
    with pytest.raises(NotAUnit):
        T({0: 1, 1: 1}).inverse()


def test_mercator():
    assert log_one_minus(T({1: 1}, 4)) == \
        T({1: -1, 2: Fraction(-1, 2), 3: Fraction(-1, 3)}, 4)
    assert log_one_minus(T({2: 1}, 4)) == T({2: -1}, 4)
    with pytest.raises(NonzeroConstantTerm):
        log_one_minus(T({0: 1, 1: 1}, 4))


def test_precision_of_products_with_poles():
    # t^-2 (1 + O(t^3)) is known to O(t^1)
    a = T({-2: 1})
    b = T({0: 1}, 3)
    assert (a * b).prec == 1


coef = st.fractions(min_value=-20, max_value=20, max_denominator=6)


@st.composite
def series(draw, var="t", low=-2):
    start = draw(st.integers(low, 2))
    coeffs = draw(st.lists(coef, min_size=1, max_size=5))
    prec = draw(st.one_of(st.none(), st.integers(start + 1, start + 8)))
    out = {start + i: c for i, c in enumerate(coeffs)
           if prec is None or start + i < prec}
    return T(out, prec, var)


@settings(max_examples=150)
@given(series(), series(), series())
def test_associativity_on_common_window(a, b, c):
    assert ((a * b) * c).agrees_with(a * (b * c))


@settings(max_examples=150)
@given(series(), series())
def test_distributive_and_commutative(a, b):
    assert (a * b).agrees_with(b * a)
    assert ((a + b) * a).agrees_with(a * a + b * a)


@settings(max_examples=150)
@given(series(low=0), st.integers(1, 10))
def test_inverse_is_two_sided(a, P):
    if not a.coeffs:
        return
    inv = a.inverse(P)
    one = T({0: 1})
    assert (a * inv).agrees_with(one)
    assert (inv * a).agrees_with(one)


@settings(max_examples=150)
@given(series("u", 0), series("u", 0), st.sampled_from([2, 3, 5]))
def test_frobenius_is_multiplicative(a, b, p):
    assert (a * b).frobenius(p).agrees_with(a.frobenius(p) * b.frobenius(p))


def test_coefficient_beyond_precision_is_refused():
    with pytest.raises(InputError):
        T({0: 1}, 2).coefficient(2)
