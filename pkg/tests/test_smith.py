import random

import pytest

from eigmap.fields import GF, QQ
from eigmap.generators import random_matrix, random_unimodular
from eigmap.poly import Poly, valuation
from eigmap.polymat import (
    PolyMatrix,
    determinantal_divisors,
    is_unimodular,
)
from eigmap.ratmap import CharPoint
from eigmap.smith import (
    elementary_divisors_finite,
    elementary_divisors_infinite,
    exponents_at_base,
    infinite_structure_at_grade,
    smith_form,
)

from conftest import matrix, px, py


def ratios_from_determinantal(P):
    dd = determinantal_divisors(P)
    out = []
    prev = Poly.one(P.field)
    for D in dd:
        if D.is_zero():
            out.append(Poly.zero(P.field))
            continue
        out.append(D.exact_div(prev).monic())
        prev = D
    return out


def test_smith_intro_golden(intro_matrix):
    sd = smith_form(intro_matrix)
    assert list(sd.invariant_polys) == [px("1"), px("x^2-20*x"), px("x^3-20*x^2")]
    assert is_unimodular(sd.A)
    assert is_unimodular(sd.B)
    assert sd.rank == 3
    # two explicit zero padding rows below the diagonal
    assert sd.S.rows == 5 and sd.S.cols == 3
    assert all(sd.S[i, j].is_zero() for i in (3, 4) for j in range(3))


def test_smith_unimodular_gives_identity():
    U = matrix([["1", "x"], ["0", "1"]])
    sd = smith_form(U)
    assert list(sd.invariant_polys) == [px("1"), px("1")]
    assert sd.S.same_entries(PolyMatrix.identity(QQ, 2))


def test_smith_zero_matrix():
    Z = PolyMatrix.zero(QQ, 2, 3, grade=1)
    sd = smith_form(Z)
    assert all(d.is_zero() for d in sd.invariant_polys)
    assert sd.S.same_entries(Z)
    assert sd.A.same_entries(PolyMatrix.identity(QQ, 2))
    assert sd.B.same_entries(PolyMatrix.identity(QQ, 3))


def test_smith_oracle_small_random():
    rng = random.Random(7)
    for i in range(30):
        field = QQ if i % 2 == 0 else GF(7)
        P = random_matrix(
            field, rng, rng.randint(1, 4), rng.randint(1, 4), rng.randint(0, 4)
        )
        sd = smith_form(P)
        assert list(sd.invariant_polys) == ratios_from_determinantal(P)


def test_divisors_finite_goldens(intro_matrix, intro_map):
    div = elementary_divisors_finite(intro_matrix)
    assert div.exponents_of(CharPoint.finite(px("x-20"))) == (1, 1)
    assert div.exponents_of(CharPoint.finite(px("x"))) == (1, 2)
    assert div.rank == 3

    from eigmap.ratmap import phi_matrix

    Q = phi_matrix(intro_matrix, intro_map)
    divq = elementary_divisors_finite(Q)
    assert divq.exponents_of(CharPoint.finite(py("y-5/2"))) == (2, 2)
    assert divq.exponents_of(CharPoint.finite(py("y-5/4"))) == (1, 2)
    assert divq.exponents_of(CharPoint.finite(py("y+5/4"))) == (1, 2)

    D = matrix([["x^2+2"]])
    divd = elementary_divisors_finite(D)
    assert divd.exponents_of(CharPoint.finite(px("x^2+2"))) == (1,)


def test_positional_exponents(intro_matrix):
    div = elementary_divisors_finite(intro_matrix)
    assert div.positional_exponents(CharPoint.finite(px("x"))) == (0, 1, 2)
    assert div.positional_exponents(CharPoint.finite(px("x-20"))) == (0, 1, 1)
    assert div.positional_exponents(CharPoint.finite(px("x-3"))) == (0, 0, 0)


def test_divisors_infinite_goldens(intro_matrix):
    assert elementary_divisors_infinite(intro_matrix) == ()
    P1 = matrix([["1"]], grade=1)
    assert elementary_divisors_infinite(P1) == (1,)
    D = matrix([["1", "0"], ["0", "x"]], grade=1)
    assert elementary_divisors_infinite(D) == (1,)


def test_infinite_structure_at_grade(intro_matrix):
    P1 = matrix([["1"]])
    assert infinite_structure_at_grade(P1, 3) == (3,)
    assert infinite_structure_at_grade(intro_matrix, 2) == ()
    assert infinite_structure_at_grade(intro_matrix, 3) == (1, 1, 1)
    with pytest.raises(ValueError):
        infinite_structure_at_grade(intro_matrix, 1)


def test_multiplier_invariance_lemma():
    # regular multipliers that stay nonsingular at a point preserve the
    # divisor exponents there
    rng = random.Random(11)
    from eigmap.polymat import determinant

    for trial in range(10):
        field = QQ if trial % 2 == 0 else GF(7)
        P = random_matrix(field, rng, 3, 3, 2)
        x0 = field.from_int(rng.randint(-2, 2))
        base = Poly(field, [field.neg(x0), field.one])
        A = None
        B = None
        while A is None or B is None:
            cand = random_matrix(field, rng, 3, 3, 1)
            det = determinant(cand)
            if det.is_zero() or field.is_zero(det.evaluate(x0)):
                continue
            if A is None:
                A = cand
            else:
                B = cand
        lhs = exponents_at_base(smith_form((A @ P) @ B).invariant_polys, base)
        rhs = exponents_at_base(smith_form(P).invariant_polys, base)
        assert lhs == rhs


def test_smith_chain_and_monicity_random():
    rng = random.Random(3)
    for trial in range(15):
        field = QQ if trial % 2 == 0 else GF(5)
        P = random_matrix(
            field, rng, rng.randint(1, 4), rng.randint(1, 4), rng.randint(0, 3)
        )
        sd = smith_form(P)
        seen_zero = False
        prev = None
        for d in sd.invariant_polys:
            if d.is_zero():
                seen_zero = True
                continue
            assert not seen_zero  # zeros trail
            assert d.leading_coeff == field.one
            if prev is not None:
                assert prev.divides(d)
            prev = d


def test_smith_transformers_unimodular_random():
    rng = random.Random(5)
    for trial in range(8):
        field = QQ if trial % 2 == 0 else GF(7)
        P = random_matrix(field, rng, 3, 3, 2)
        sd = smith_form(P)
        assert is_unimodular(sd.A)
        assert is_unimodular(sd.B)


def test_elementary_divisors_of_unimodular_product():
    # A * P * B with unimodular A, B has the same invariant polynomials
    rng = random.Random(9)
    P = matrix([["x^2", "x"], ["0", "x-1"]])
    U = random_unimodular(QQ, rng, 2)
    V = random_unimodular(QQ, rng, 2)
    assert (
        smith_form((U @ P) @ V).invariant_polys == smith_form(P).invariant_polys
    )


def test_exponents_at_base(intro_matrix):
    sd = smith_form(intro_matrix)
    assert exponents_at_base(sd.invariant_polys, px("x")) == (0, 1, 2)
    assert exponents_at_base(sd.invariant_polys, px("x-20")) == (0, 1, 1)
