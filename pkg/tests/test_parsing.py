from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eigmap.fields import GF, QQ
from eigmap.parsing import ParseError, parse_poly, parse_scalar, poly_to_str
from eigmap.poly import Poly


def test_parse_goldens():
    assert parse_poly("x^2-20*x", QQ).coeffs == (
        Fraction(0),
        Fraction(-20),
        Fraction(1),
    )
    assert parse_poly("(2*y-5)^2", QQ, "y").coeffs == (
        Fraction(25),
        Fraction(-20),
        Fraction(4),
    )
    assert parse_poly("y^4+y^3-y^2-y+1", QQ, "y").coeffs == (
        Fraction(1),
        Fraction(-1),
        Fraction(-1),
        Fraction(1),
        Fraction(1),
    )


def test_parse_rationals_and_signs():
    assert parse_poly("1/2*x - 3/4", QQ).coeffs == (Fraction(-3, 4), Fraction(1, 2))
    assert parse_poly("-x+1", QQ).coeffs == (Fraction(1), Fraction(-1))
    assert parse_poly("0", QQ).is_zero()


def test_parse_mod_p():
    F7 = GF(7)
    p = parse_poly("1/2*x + 10", F7)
    assert p.coeffs == (3, 4)  # 10 = 3, 1/2 = 4 mod 7
    with pytest.raises(ParseError):
        parse_poly("1/7*x", F7)


def test_parse_errors_carry_position():
    with pytest.raises(ParseError) as err:
        parse_poly("x + ?", QQ)
    assert "position 4" in str(err.value)
    with pytest.raises(ParseError):
        parse_poly("x + z", QQ)
    with pytest.raises(ParseError):
        parse_poly("x^(2)", QQ)
    with pytest.raises(ParseError):
        parse_poly("(x+1", QQ)
    with pytest.raises(ParseError):
        parse_poly("1/0", QQ)
    with pytest.raises(ParseError):
        parse_poly("x x", QQ)


def test_parse_scalar():
    assert parse_scalar("5/2", QQ) == Fraction(5, 2)
    assert parse_scalar("-3", QQ) == Fraction(-3)
    with pytest.raises(ParseError):
        parse_scalar("x", QQ)


def test_serialize_goldens():
    assert poly_to_str(parse_poly("x^2-20*x", QQ)) == "x^2-20*x"
    assert poly_to_str(Poly.zero(QQ)) == "0"
    assert poly_to_str(parse_poly("-x", QQ)) == "-x"
    assert poly_to_str(parse_poly("x^3 + 1/2", QQ)) == "x^3+1/2"
    assert poly_to_str(parse_poly("5", GF(7))) == "5"


@settings(max_examples=100, derandomize=True)
@given(st.lists(st.integers(min_value=-9, max_value=9), min_size=1, max_size=7))
def test_roundtrip_q(coeffs):
    p = Poly(QQ, [Fraction(c, 2) if i % 3 == 0 else Fraction(c) for i, c in enumerate(coeffs)])
    assert parse_poly(poly_to_str(p), QQ) == p


@settings(max_examples=100, derandomize=True)
@given(st.lists(st.integers(min_value=0, max_value=10), min_size=1, max_size=7))
def test_roundtrip_f11(coeffs):
    p = Poly(GF(11), coeffs)
    assert parse_poly(poly_to_str(p), GF(11)) == p
