import pytest

from eigmap.fields import QQ
from eigmap.parsing import parse_poly
from eigmap.polymat import PolyMatrix
from eigmap.ratmap import RationalMap


def px(s, field=QQ):
    return parse_poly(s, field, "x")


def py(s, field=QQ):
    return parse_poly(s, field, "y")


def matrix(rows, field=QQ, grade=None, var="x"):
    return PolyMatrix(
        field, [[parse_poly(e, field, var) for e in row] for row in rows], grade
    )


@pytest.fixture
def intro_matrix():
    """5x3 matrix of grade 2 whose eigenstructure is known exactly."""
    return matrix(
        [
            ["x^2-20*x", "0", "0"],
            ["x-20", "x^2-20*x", "0"],
            ["0", "0", "x"],
            ["0", "0", "x^2"],
            ["0", "0", "0"],
        ],
        grade=2,
    )


@pytest.fixture
def intro_map():
    return RationalMap(py("16*y^2-25"), py("y^2-y"))


@pytest.fixture
def chain_matrix():
    """4x4 matrix with a one-dimensional kernel and minimal basis
    [1, -x, x^2, 0]."""
    return matrix(
        [
            ["x", "1", "0", "0"],
            ["0", "x", "1", "0"],
            ["0", "0", "0", "0"],
            ["0", "0", "0", "x"],
        ],
        grade=1,
    )
