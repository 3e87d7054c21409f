from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eigmap.factorization import (
    FactorizationLimitError,
    factor_irreducible,
    frobenius_degree_pattern,
    is_irreducible,
    squarefree_decompose,
)
from eigmap.fields import GF, QQ
from eigmap.poly import Poly, poly_gcd

from conftest import px, py


def test_squarefree_goldens():
    unit, parts = squarefree_decompose(px("(x-1)^2*(x+1)"))
    assert unit == 1
    assert parts == [(px("x+1"), 1), (px("x-1"), 2)]

    unit, parts = squarefree_decompose(px("x^2"))
    assert unit == 1
    assert parts == [(px("x"), 2)]

    unit, parts = squarefree_decompose(py("(2*y-5)^2"))
    assert unit == Fraction(4)
    assert parts == [(py("y-5/2"), 2)]


def test_squarefree_char_bound():
    F5 = GF(5)
    with pytest.raises(FactorizationLimitError):
        squarefree_decompose(px("x^5+x+1", F5))
    squarefree_decompose(px("x^4+x+1", F5))


def test_squarefree_zero():
    with pytest.raises(ValueError):
        squarefree_decompose(Poly.zero(QQ))


def test_factor_goldens_q():
    fac = factor_irreducible(px("x^2+2"))
    assert fac.is_irreducible()

    fac = factor_irreducible(py("y^4-1"))
    assert fac.factors == (
        (py("y-1"), 1),
        (py("y+1"), 1),
        (py("y^2+1"), 1),
    )

    assert factor_irreducible(py("y^4+2")).is_irreducible()


def test_factor_reconstructs():
    p = px("6*x^5-6*x")
    fac = factor_irreducible(p)
    assert fac.expand() == p
    assert fac.unit == Fraction(6)


def test_factor_with_multiplicities():
    p = px("(x-1)^3*(x^2+1)^2*x")
    fac = factor_irreducible(p)
    assert dict(fac.factors) == {px("x"): 1, px("x-1"): 3, px("x^2+1"): 2}
    assert fac.expand() == p


def test_factor_f7():
    F7 = GF(7)
    p = px("x^2+6*x+5", F7)  # (x+1)(x+5) mod 7
    fac = factor_irreducible(p)
    assert dict(fac.factors) == {px("x+1", F7): 1, px("x+5", F7): 1}
    assert fac.expand() == p


def test_factor_f7_inseparable_power():
    # x^7 - 1 = (x - 1)^7 in characteristic 7.
    F7 = GF(7)
    fac = factor_irreducible(px("x^7+6", F7))
    assert fac.factors == ((px("x+6", F7), 7),)


def test_factor_hints_peel_before_blind():
    p = px("(x^2+1)^2*(x-3)")
    fac = factor_irreducible(p, hints=(px("x^2+1"),))
    assert dict(fac.factors) == {px("x^2+1"): 2, px("x-3"): 1}


def test_factor_zero():
    with pytest.raises(ValueError):
        factor_irreducible(Poly.zero(QQ))


def test_factor_constant():
    fac = factor_irreducible(px("5"))
    assert fac.factors == ()
    assert fac.unit == Fraction(5)
    assert fac.expand() == px("5")


def test_is_irreducible():
    assert is_irreducible(px("x+3"))
    assert is_irreducible(px("x^2+2"))
    assert not is_irreducible(px("x^2-1"))
    assert not is_irreducible(px("4"))


def test_degree_pattern():
    F7 = GF(7)
    p = px("x^2+6*x+5", F7)
    assert frobenius_degree_pattern(p) == [1, 1]
    assert frobenius_degree_pattern(px("x^2+1", F7)) == [2]  # -1 nonsquare mod 7
    assert frobenius_degree_pattern(px("(x+1)^2", F7)) is None


def test_blind_limits():
    F7 = GF(7)
    # Degree 14 with repeated factors: no pattern, exceeds the blind cap.
    big = (px("x^2+1", F7) * px("x+1", F7)) ** 2 * px("x^8+x+3", F7)
    with pytest.raises(FactorizationLimitError):
        factor_irreducible(big)
    # The same product factors fine once hints peel it down.
    fac = factor_irreducible(
        big, hints=(px("x^2+1", F7), px("x+1", F7), px("x^8+x+3", F7))
    )
    assert fac.expand() == big


_coeffs_q = st.integers(min_value=-4, max_value=4)


@settings(max_examples=40, deadline=None, derandomize=True)
@given(st.lists(_coeffs_q, min_size=1, max_size=7))
def test_factor_roundtrip_q(coeffs):
    p = Poly(QQ, coeffs)
    if p.is_zero():
        return
    fac = factor_irreducible(p)
    assert fac.expand() == p
    for base, _ in fac.factors:
        assert base.leading_coeff == QQ.one
        assert is_irreducible(base)


@settings(max_examples=40, deadline=None, derandomize=True)
@given(st.lists(st.integers(min_value=0, max_value=6), min_size=1, max_size=9))
def test_factor_roundtrip_f7(coeffs):
    p = Poly(GF(7), coeffs)
    if p.is_zero():
        return
    fac = factor_irreducible(p)
    assert fac.expand() == p


@settings(max_examples=40, deadline=None, derandomize=True)
@given(st.lists(_coeffs_q, min_size=2, max_size=7))
def test_squarefree_bases_pairwise_coprime(coeffs):
    p = Poly(QQ, coeffs)
    if p.is_zero() or p.degree < 1:
        return
    unit, parts = squarefree_decompose(p)
    rebuilt = Poly.constant(QQ, unit)
    for base, exp in parts:
        rebuilt = rebuilt * base**exp
    assert rebuilt == p
    for i in range(len(parts)):
        for j in range(i + 1, len(parts)):
            assert poly_gcd(parts[i][0], parts[j][0]).is_one()
