from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cubichecke.cyclotomic import (
    Cyclotomic,
    I_UNIT,
    MINUS_ONE,
    ONE,
    THETA,
    THETA2,
    ZERO,
    rat,
    theta_power,
)

rationals = st.fractions(
    min_value=Fraction(-30), max_value=Fraction(30), max_denominator=12
)
elements = st.builds(Cyclotomic, rationals, rationals, rationals, rationals)


def test_theta_is_a_primitive_cube_root():
    assert THETA * THETA * THETA == ONE
    assert THETA != ONE
    assert ONE + THETA + THETA * THETA == ZERO
    assert THETA * THETA == THETA2


def test_i_is_a_fourth_root():
    assert I_UNIT * I_UNIT == MINUS_ONE
    assert I_UNIT ** 4 == ONE


def test_theta_power():
    assert theta_power(0) == ONE
    assert theta_power(1) == THETA
    assert theta_power(2) == THETA2
    assert theta_power(3) == ONE
    assert theta_power(5) == THETA2


def test_division():
    x = Cyclotomic(3, -2, 1, Fraction(1, 2))
    assert x * x.inverse() == ONE
    assert (x / x) == ONE
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()


def test_rational_fast_paths():
    assert rat(3, 4) * rat(8) == rat(6)
    assert rat(3) + THETA == Cyclotomic(2, 0, 1)


@given(elements, elements, elements)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a + ZERO == a
    assert a * ONE == a
    assert a - a == ZERO


@given(elements)
def test_field_inverse(a):
    if not a.is_zero():
        assert a * a.inverse() == ONE


@given(elements, st.integers(min_value=0, max_value=6))
def test_powers(a, n):
    out = ONE
    for _ in range(n):
        out = out * a
    assert a ** n == out
