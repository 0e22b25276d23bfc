from fractions import Fraction

import pytest

from cubichecke.catalog import label4
from cubichecke.cyclotomic import Cyclotomic, I_UNIT, THETA
from cubichecke.expr import (
    ParseError,
    parse_ideal,
    parse_label,
    parse_point,
    parse_poly,
    parse_scalar,
)


def test_scalars():
    assert parse_scalar("2") == Cyclotomic(2)
    assert parse_scalar("-3/4") == Cyclotomic(Fraction(-3, 4))
    assert parse_scalar("theta") == THETA
    assert parse_scalar("theta^2") == THETA * THETA
    assert parse_scalar("i") == I_UNIT
    assert parse_scalar("2*theta - 1") == Cyclotomic(-1) + THETA + THETA
    assert parse_scalar("(1+theta)^2") == (Cyclotomic(1) + THETA) ** 2


def test_points():
    pt = parse_point("2, 3, 5")
    assert pt == (Cyclotomic(2), Cyclotomic(3), Cyclotomic(5))
    pt = parse_point("1,-theta^2,theta")
    assert pt[1] == -(THETA * THETA)
    with pytest.raises(ParseError):
        parse_point("1,2")


def test_ideals():
    assert parse_ideal("l1+theta*l2").name == "l1+theta*l2"
    assert parse_ideal("l2^3-l1^2*l3").name == "l2^3-l1^2*l3"
    assert parse_ideal("l1^2-theta^2*l2*l3").name == "l1^2-theta^2*l2*l3"
    # unit multiples match the same catalog entry
    assert parse_ideal("theta*l1+theta^2*l2").name == "l1+theta*l2"
    with pytest.raises(ParseError):
        parse_ideal("l1+2*l2")


def test_labels():
    assert parse_label("l1^3*l2^2*l3") == label4((3, 2, 1))
    assert parse_label("l1^3*l2^3*l3^3:theta") == label4((3, 3, 3), 1)
    assert parse_label("l1^3*l2^3*l3^3:theta2") == label4((3, 3, 3), 2)
    with pytest.raises(ParseError):
        parse_label("l1^9")
    with pytest.raises(ParseError):
        parse_label("l1+l2")


def test_poly_division_rules():
    assert parse_poly("l1^2/l2") == parse_poly("l1^2*l2^-1")
    with pytest.raises(ParseError):
        parse_poly("1/(l1+l2)")


def test_parse_errors():
    with pytest.raises(ParseError):
        parse_scalar("l1")
    with pytest.raises(ParseError):
        parse_poly("2 +")
    with pytest.raises(ParseError):
        parse_poly("frobenius")
