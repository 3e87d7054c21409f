from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eigmap.fields import GF, QQ, FieldMismatchError
from eigmap.poly import (
    Poly,
    gcd_extended,
    poly_gcd,
    reversal,
    valuation,
    x_valuation,
)

from conftest import px, py


def test_mul_golden():
    assert px("x-20") * px("x") == px("x^2-20*x")


def test_divmod_golden():
    q, r = divmod(px("x^2-20*x"), px("x-20"))
    assert q == px("x")
    assert r.is_zero()


def test_monic_golden():
    assert px("2*x^2-2").monic() == px("x^2-1")


def test_divmod_by_zero():
    with pytest.raises(ZeroDivisionError):
        divmod(px("x"), Poly.zero(QQ))


def test_field_mismatch():
    with pytest.raises(FieldMismatchError):
        px("x") + px("x", GF(7))


def test_gcd_common_factor():
    g, u, v = gcd_extended(px("x^2-20*x"), px("x-20"))
    assert g == px("x-20")
    assert u * px("x^2-20*x") + v * px("x-20") == g


def test_gcd_unit_input():
    g, u, v = gcd_extended(px("x"), px("1"))
    assert g == px("1")
    assert u.is_zero() and v == px("1")


def test_gcd_intro_map_pair():
    a, b = py("16*y^2-25"), py("y^2-y")
    g, u, v = gcd_extended(a, b)
    assert g == py("1")
    assert u * a + v * b == g


def test_gcd_both_zero():
    with pytest.raises(ValueError):
        poly_gcd(Poly.zero(QQ), Poly.zero(QQ))


def test_reversal_goldens():
    assert reversal(px("x-20"), 2) == px("-20*x^2+x")
    c = Poly.constant(QQ, Fraction(5))
    assert reversal(c, 0) == c
    assert reversal(py("y^4+y^3-y^2-y+1"), 4) == py("y^4-y^3-y^2+y+1")


def test_reversal_grade_too_small():
    with pytest.raises(ValueError):
        reversal(px("x^2"), 1)


def test_evaluate_goldens():
    p = px("x^2-20*x")
    assert p.evaluate(16) == -64
    assert p.evaluate(20) == 0
    assert p.evaluate(0) == 0


def test_valuation():
    p = px("x^2*(x-1)^3")
    assert valuation(p, px("x")) == 2
    assert valuation(p, px("x-1")) == 3
    assert valuation(p, px("x+1")) == 0
    assert x_valuation(p) == 2


def test_pow_and_compose():
    assert px("x+1") ** 2 == px("x^2+2*x+1")
    assert px("x^2").compose(px("x+1")) == px("x^2+2*x+1")


_small_coeffs = st.integers(min_value=-5, max_value=5)


def polys_q(max_deg=5):
    return st.lists(_small_coeffs, min_size=1, max_size=max_deg + 1).map(
        lambda cs: Poly(QQ, cs)
    )


def polys_f7(max_deg=5):
    return st.lists(
        st.integers(min_value=0, max_value=6), min_size=1, max_size=max_deg + 1
    ).map(lambda cs: Poly(GF(7), cs))


@settings(max_examples=60, derandomize=True)
@given(polys_q(), polys_q())
def test_bezout_identity_q(a, b):
    if a.is_zero() and b.is_zero():
        return
    g, u, v = gcd_extended(a, b)
    assert u * a + v * b == g
    if not g.is_zero():
        assert g.leading_coeff == QQ.one
        assert g.divides(a) and g.divides(b)


@settings(max_examples=60, derandomize=True)
@given(polys_f7(), polys_f7())
def test_bezout_identity_f7(a, b):
    if a.is_zero() and b.is_zero():
        return
    g, u, v = gcd_extended(a, b)
    assert u * a + v * b == g


@settings(max_examples=60, derandomize=True)
@given(polys_q())
def test_reversal_involution(z):
    if z.is_zero() or z.coeff(0) == 0:
        return
    g = z.degree
    assert reversal(reversal(z, g), g) == z


@settings(max_examples=60, derandomize=True)
@given(polys_q(), polys_q())
def test_divmod_reconstruction(a, b):
    if b.is_zero():
        return
    q, r = divmod(a, b)
    assert q * b + r == a
    assert r.degree < b.degree
