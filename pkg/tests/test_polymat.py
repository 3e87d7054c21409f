import pytest

from eigmap.fields import GF, QQ
from eigmap.linalg import rank as const_rank
from eigmap.polymat import (
    PolyMatrix,
    determinant,
    determinantal_divisors,
    eval_matrix,
    is_unimodular,
    rank_fraction_field,
    reversal_matrix,
)

from conftest import matrix, px


def test_grade_validation():
    with pytest.raises(ValueError):
        matrix([["x^2"]], grade=1)
    M = matrix([["x^2"]])
    assert M.grade == 2
    assert PolyMatrix.zero(QQ, 2, 2, grade=1).grade == 1


def test_reversal_matrix_golden(intro_matrix):
    R = reversal_matrix(intro_matrix)
    assert R[0, 0] == px("1-20*x")
    assert R[2, 2] == px("x")  # x at grade 2 reverses to x
    assert R.grade == 2


def test_reversal_constant_matrix():
    C = matrix([["3", "1"], ["0", "2"]], grade=2)
    R = reversal_matrix(C)
    assert R[0, 0] == px("3*x^2")
    assert R[1, 1] == px("2*x^2")


def test_reversal_involution_on_exact_grade(chain_matrix):
    # no entry divisible by x and grade == degree
    M = matrix([["x+1", "1"], ["2", "x^2+x+1"]])
    assert reversal_matrix(reversal_matrix(M)).same_entries(M)


def test_eval_matrix(intro_matrix, chain_matrix):
    vals = eval_matrix(intro_matrix, 16)
    assert vals[0][0] == -64
    at0 = eval_matrix(chain_matrix, 0)
    assert const_rank(QQ, at0) == 2  # kernel of the evaluation is 2-dimensional
    C = matrix([["5"]])
    assert eval_matrix(C, 3) == [[5]]


def test_rank_fraction_field(intro_matrix, chain_matrix):
    assert rank_fraction_field(intro_matrix) == 3
    assert rank_fraction_field(PolyMatrix.zero(QQ, 3, 2)) == 0
    assert rank_fraction_field(chain_matrix) == 3


def test_rank_transpose_invariant(intro_matrix):
    assert rank_fraction_field(intro_matrix.transpose()) == 3


def test_rank_small_prime_field_fallback():
    # GF(2) has too few points for evaluation, forcing minor expansion.
    F2 = GF(2)
    M = matrix([["x^2+x", "1"], ["x", "x^3"]], field=F2)
    r = rank_fraction_field(M)
    assert r == 2


def test_is_unimodular():
    assert is_unimodular(PolyMatrix.identity(QQ, 3))
    assert not is_unimodular(matrix([["x", "0"], ["0", "1"]]))
    with pytest.raises(ValueError):
        is_unimodular(matrix([["x", "0", "0"], ["0", "1", "0"]]))


def test_bezout_swap_multiplier_is_unimodular():
    # the 2x2 premultiplier [[1, 1], [-b*q, 1 - b*q]] has determinant 1
    b, q = px("x+2"), px("x^2-1")
    M = PolyMatrix(
        QQ,
        [
            [px("1"), px("1")],
            [-(b * q), px("1") - b * q],
        ],
    )
    assert determinant(M) == px("1")
    assert is_unimodular(M)


def test_determinantal_divisors_golden(intro_matrix):
    dd = determinantal_divisors(intro_matrix)
    assert dd == [px("1"), px("x^2-20*x"), px("x^5-40*x^4+400*x^3")]


def test_determinantal_divisors_zero_and_diag():
    assert determinantal_divisors(PolyMatrix.zero(QQ, 2, 3)) == [
        px("0"),
        px("0"),
    ]
    D = matrix([["1", "0", "0"], ["0", "x", "0"], ["0", "0", "x^2"]])
    assert determinantal_divisors(D) == [px("1"), px("x"), px("x^3")]


def test_determinantal_divisor_chain(intro_matrix):
    dd = determinantal_divisors(intro_matrix)
    for a, b in zip(dd, dd[1:]):
        if not a.is_zero() and not b.is_zero():
            assert a.divides(b)


def test_matmul_and_transpose_grade():
    M = matrix([["x", "1"], ["0", "x"]], grade=3)
    assert M.transpose().grade == 3
    I = PolyMatrix.identity(QQ, 2)
    assert (M @ I).same_entries(M)
